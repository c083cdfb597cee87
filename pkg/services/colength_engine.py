"""
Truncated Macaulay-matrix colength engine.

For a truncation degree D, the rows are the products x^a y^b * g (g a
generator, a + b + order(g) < D) with every term of degree >= D dropped,
written over the monomials of degree < D. The quotient dimension at that
truncation is  #monomials - rank.  Once every monomial of degree D - 1 is
a pivot of the echelon form, m^(D-1) lies in I + m^D, hence in I by
Nakayama, and the truncated value is the colength of I at the origin.

Columns are ordered by ascending total degree so that pivots are the
lowest-degree terms (local ordering). Ranks are computed with sparse
Bareiss elimination over the integers.
"""
from typing import Dict, Iterator, List, Sequence, Tuple

from exceptions import InternalConsistencyError
from models.models import ColengthResult
from models.polynomial import Poly, order

SparseRow = Dict[int, int]


def monomial_count(degree: int) -> int:
    """Number of monomials x^a y^b with a + b < degree"""
    return degree * (degree + 1) // 2


def monomial_index(a: int, b: int) -> int:
    total = a + b
    return monomial_count(total) + b


def macaulay_rows(gens: Sequence[Poly], degree: int) -> List[SparseRow]:
    rows: List[SparseRow] = []
    for generator in gens:
        if generator.is_zero():
            continue
        low = order(generator)
        if low >= degree:
            continue
        # clearing denominators does not change the span
        coefficients = generator.integer_coefficients()
        for shift in range(degree - low):
            kept = [
                ((a, b), c) for (a, b), c in coefficients.items()
                if a + b + shift < degree
            ]
            for a_shift in range(shift + 1):
                b_shift = shift - a_shift
                rows.append({
                    monomial_index(a + a_shift, b + b_shift): c
                    for (a, b), c in kept
                })
    return rows


def _exact_quotient(value: int, divisor: int) -> int:
    quotient, remainder = divmod(value, divisor)
    if remainder:
        raise InternalConsistencyError(
            f"Bareiss division left remainder {remainder} (divisor {divisor})"
        )
    return quotient


def bareiss_pivot_columns(rows: Sequence[SparseRow], column_count: int) -> List[int]:
    """
    Fraction-free row echelon form; returns the pivot columns in order.

    Every surviving entry after k pivots is a (k+1)-minor of the input, so
    the division by the previous pivot is exact.
    """
    remaining = [dict(row) for row in rows if row]
    pivots: List[int] = []
    previous = 1

    for column in range(column_count):
        if not remaining:
            break
        candidates = [i for i, row in enumerate(remaining) if column in row]
        if not candidates:
            continue
        # sparsest pivot row keeps fill-in down
        chosen = min(candidates, key=lambda i: len(remaining[i]))
        pivot_row = remaining.pop(chosen)
        pivot = pivot_row[column]

        updated_rows = []
        for row in remaining:
            factor = row.get(column)
            if factor is None:
                updated = {c: _exact_quotient(v * pivot, previous) for c, v in row.items()}
            else:
                merged = {c: v * pivot for c, v in row.items()}
                for c, v in pivot_row.items():
                    merged[c] = merged.get(c, 0) - factor * v
                updated = {c: _exact_quotient(v, previous) for c, v in merged.items() if v}
            if updated:
                updated_rows.append(updated)

        remaining = updated_rows
        previous = pivot
        pivots.append(column)

    return pivots


def colength_at_degree(gens: Sequence[Poly], degree: int) -> Tuple[int, bool]:
    """
    One truncation step.

    Returns d(D) = dim of the truncated quotient and whether the Nakayama
    certificate (all degree D-1 monomials are pivots) holds at this D.
    """
    if degree < 1:
        raise ValueError("truncation degree must be at least 1")
    columns = monomial_count(degree)
    pivots = set(bareiss_pivot_columns(macaulay_rows(gens, degree), columns))
    value = columns - len(pivots)
    certified = all(column in pivots for column in range(monomial_count(degree - 1), columns))
    return value, certified


def truncation_schedule(start: int, cap: int) -> Iterator[int]:
    """start, 2*start, 4*start, ... clamped so the last degree tried is cap"""
    degree = min(start, cap)
    while True:
        yield degree
        if degree >= cap:
            return
        degree = min(degree * 2, cap)


def starting_degree(gens: Sequence[Poly], min_degree: int = 2) -> int:
    highest = max(order(g) for g in gens if not g.is_zero())
    return max(2 * int(highest) + 2, min_degree)


def compute_colength(gens: Sequence[Poly], cap: int, min_degree: int = 2) -> ColengthResult:
    """Run the truncation schedule until the certificate fires or the cap is reached"""
    for degree in truncation_schedule(starting_degree(gens, min_degree), cap):
        value, certified = colength_at_degree(gens, degree)
        if certified:
            return ColengthResult(value=value, certified_degree=degree, cap=cap)
    return ColengthResult(value=None, certified_degree=None, cap=cap)
