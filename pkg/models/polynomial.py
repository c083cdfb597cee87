"""
Exact sparse bivariate polynomials over the rationals.

A Poly stores only nonzero coefficients keyed by exponent pairs (a, b) for
the monomial x^a y^b. Values are immutable once built, so they are safe to
share between threads and usable as dict keys and cache keys.
"""
import math
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from exceptions import NotDivisibleError

Rational = Fraction
Monomial = Tuple[int, int]
ExtendedInt = Union[int, float]  # N u {inf}, with math.inf standing for infinity
INFINITY = math.inf

Scalar = Union[int, Fraction]


def to_rational(value) -> Fraction:
    """Coerce an exact scalar to a Fraction (floats are rejected)"""
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not supported; use int, Fraction or 'a/b'")
    return Fraction(value)


def _grlex_key(monomial: Monomial) -> Tuple[int, int]:
    # graded lexicographic with x before y
    return (monomial[0] + monomial[1], monomial[0])


class Poly:
    """Sparse polynomial in x, y with Fraction coefficients"""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            a, b = monomial
            if not (isinstance(a, int) and isinstance(b, int)) or a < 0 or b < 0:
                raise ValueError(f"exponents must be natural numbers, got {monomial!r}")
            value = to_rational(coefficient)
            if value:
                cleaned[(a, b)] = value
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> 'Poly':
        """Build from an already clean dict (no zero coefficients) without copying"""
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value: Scalar) -> 'Poly':
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, a: int, b: int, coefficient: Scalar = 1) -> 'Poly':
        return cls({(a, b): coefficient})

    # -- inspection -----------------------------------------------------

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def monomials(self) -> List[Monomial]:
        return list(self._terms)

    def coefficient(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(monomial == (0, 0) for monomial in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Largest a+b over the terms; -1 for the zero polynomial"""
        return max((a + b for a, b in self._terms), default=-1)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in canonical order: descending graded lex, x before y"""
        return sorted(self._terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        monomial = max(self._terms, key=_grlex_key)
        return monomial, self._terms[monomial]

    def evaluate(self, x: Scalar, y: Scalar) -> Fraction:
        x, y = to_rational(x), to_rational(y)
        return sum((c * x ** a * y ** b for (a, b), c in self._terms.items()), Fraction(0))

    def integer_coefficients(self) -> Dict[Monomial, int]:
        """Coefficients scaled by the lcm of their denominators (a nonzero multiple of self)"""
        scale = reduce(math.lcm, (c.denominator for c in self._terms.values()), 1)
        return {monomial: int(c * scale) for monomial, c in self._terms.items()}

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> Optional['Poly']:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            value = result.get(monomial, 0) + coefficient
            if value:
                result[monomial] = value
            else:
                result.pop(monomial, None)
        return Poly._wrap(result)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({monomial: -c for monomial, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        result: Dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                result[key] = result.get(key, 0) + c1 * c2
        return Poly._wrap({monomial: c for monomial, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be natural numbers")
        result = Poly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Scalar) -> 'Poly':
        factor = to_rational(factor)
        if not factor:
            return Poly()
        return Poly._wrap({monomial: c * factor for monomial, c in self._terms.items()})

    def shift(self, a: int, b: int) -> 'Poly':
        """Multiply by the monomial x^a y^b"""
        return Poly._wrap({(m[0] + a, m[1] + b): c for m, c in self._terms.items()})

    # -- protocol -------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for index, ((a, b), c) in enumerate(self.sorted_terms()):
            sign = '-' if c < 0 else '+'
            body = _format_term(abs(c), a, b)
            if index == 0:
                pieces.append(body if sign == '+' else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return ''.join(pieces)

    def __repr__(self):
        return f"Poly('{self}')"


def _format_term(magnitude: Fraction, a: int, b: int) -> str:
    factors = []
    if magnitude != 1 or (a == 0 and b == 0):
        factors.append(str(magnitude))
    for name, power in (('x', a), ('y', b)):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(f"{name}^{power}")
    return '*'.join(factors)


def _var_index(var: str) -> int:
    if var == 'x':
        return 0
    if var == 'y':
        return 1
    raise ValueError(f"unknown variable {var!r}; only x and y are supported")


ZERO = Poly()
ONE = Poly.constant(1)
X = Poly.monomial(1, 0)
Y = Poly.monomial(0, 1)


class UniPoly:
    """Univariate polynomial in y1, coefficients stored lowest degree first"""

    __slots__ = ('coefficients',)

    def __init__(self, coefficients: Sequence[Scalar] = ()):
        values = [to_rational(c) for c in coefficients]
        while values and not values[-1]:
            values.pop()
        self.coefficients = tuple(values)

    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, value: Scalar) -> Fraction:
        value = to_rational(value)
        result = Fraction(0)
        for coefficient in reversed(self.coefficients):
            result = result * value + coefficient
        return result

    def deflate(self, root: Fraction) -> 'UniPoly':
        """Synthetic division by (y1 - root); the remainder must be zero"""
        quotient = []
        carry = Fraction(0)
        for coefficient in reversed(self.coefficients):
            carry = carry * root + coefficient
            quotient.append(carry)
        remainder = quotient.pop()
        if remainder:
            raise NotDivisibleError(f"{root} is not a root")
        return UniPoly(list(reversed(quotient)))

    def __add__(self, other: 'UniPoly') -> 'UniPoly':
        size = max(len(self.coefficients), len(other.coefficients))
        padded = [
            (self.coefficients[i] if i < len(self.coefficients) else 0)
            + (other.coefficients[i] if i < len(other.coefficients) else 0)
            for i in range(size)
        ]
        return UniPoly(padded)

    def times_variable(self) -> 'UniPoly':
        """Multiply by y1"""
        if self.is_zero():
            return self
        return UniPoly((Fraction(0),) + self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        if self.is_zero():
            return '0'
        return str(Poly({(0, k): c for k, c in enumerate(self.coefficients)})).replace('y', 'y1')

    def __repr__(self):
        return f"UniPoly({list(map(str, self.coefficients))})"


# -- poly_core operations ------------------------------------------------

def arith(p: Poly, q: Poly, op: str) -> Poly:
    """Exact ring arithmetic; op is one of 'add', 'sub', 'mul'"""
    if op == 'add':
        return p + q
    if op == 'sub':
        return p - q
    if op == 'mul':
        return p * q
    raise ValueError(f"unsupported operation {op!r}")


def partial(p: Poly, var: str) -> Poly:
    """Formal partial derivative with respect to x or y"""
    index = _var_index(var)
    result = {}
    for monomial, c in p.items():
        power = monomial[index]
        if power:
            lowered = (monomial[0] - 1, monomial[1]) if index == 0 else (monomial[0], monomial[1] - 1)
            result[lowered] = c * power
    return Poly._wrap(result)


def order(p: Poly) -> ExtendedInt:
    """Multiplicity at the origin: lowest total degree, infinity for 0"""
    return min((a + b for a, b in p.monomials()), default=INFINITY)


def homogeneous_component(p: Poly, d: int) -> Poly:
    return Poly._wrap({m: c for m, c in p.items() if m[0] + m[1] == d})


def exact_divide(p: Poly, d: Poly) -> Poly:
    """
    Quotient q with p = q*d, by reduction against d's graded-lex leading term.

    Raises NotDivisibleError as soon as a leading term of the running
    remainder is not a multiple of the leading term of d.
    """
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    (da, db), dc = d.leading_term()
    remainder = p
    quotient: Dict[Monomial, Fraction] = {}
    while remainder:
        (ra, rb), rc = remainder.leading_term()
        if ra < da or rb < db:
            raise NotDivisibleError(f"{p} is not divisible by {d}")
        step = (ra - da, rb - db)
        factor = rc / dc
        quotient[step] = quotient.get(step, 0) + factor
        remainder = remainder - d.shift(*step).scale(factor)
    return Poly({m: c for m, c in quotient.items() if c})


def substitute(p: Poly, sx: Poly, sy: Poly) -> Poly:
    """Evaluate p(sx, sy) exactly"""
    x_powers = {0: ONE}
    y_powers = {0: ONE}

    def power(cache, base, k):
        if k not in cache:
            nearest = max(j for j in cache if j < k)
            value = cache[nearest]
            for _ in range(k - nearest):
                value = value * base
            cache[k] = value
        return cache[k]

    result = ZERO
    for (a, b), c in sorted(p.items()):
        result = result + (power(x_powers, sx, a) * power(y_powers, sy, b)).scale(c)
    return result


def restrict_to_line(p: Poly, d: int) -> UniPoly:
    """Degree-d homogeneous part of p evaluated at (1, y1)"""
    component = homogeneous_component(p, d)
    coefficients = [Fraction(0)] * (d + 1)
    for (_, b), c in component.items():
        coefficients[b] = c
    return UniPoly(coefficients)


def root_multiplicity(q: UniPoly, r: Scalar) -> ExtendedInt:
    """Multiplicity of y1 = r as a root of q; infinity for the zero polynomial"""
    if q.is_zero():
        return INFINITY
    r = to_rational(r)
    count = 0
    while not q.is_zero() and q.evaluate(r) == 0:
        q = q.deflate(r)
        count += 1
    return count
