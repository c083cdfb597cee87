"""
Structured JSON logging for the toolkit, shaped for Loki ingestion.

Log records go to stderr (stdout is reserved for command reports) and
optionally to a rotating file.
"""
import functools
import json
import logging
import os
import sys
import time
from datetime import datetime, timezone
from logging.handlers import RotatingFileHandler

from config import get_config
from utils import deep_serialize


class LokiJSONFormatter(logging.Formatter):
    """One JSON object per line; extras such as polynomials and infinite indices are serialized exactly"""

    reserved_attributes = {
        'name', 'msg', 'args', 'levelname', 'levelno', 'pathname', 'filename',
        'module', 'exc_info', 'exc_text', 'stack_info', 'lineno', 'funcName',
        'created', 'msecs', 'relativeCreated', 'thread', 'threadName',
        'processName', 'process', 'getMessage', 'extra', 'taskName'
    }

    def __init__(self, config=None):
        super().__init__()
        self.config = config or get_config()

    def format(self, record):
        log_data = {
            'timestamp': datetime.now(timezone.utc).isoformat().replace('+00:00', 'Z'),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno,
            'service': self.config.APP_TITLE,
            'environment': self.config.APP_ENV,
            'version': self.config.APP_VERSION
        }

        labels = self.config.get_logging_config().get('loki_labels')
        if labels:
            log_data['labels'] = labels

        # Extra fields passed via `extra=` land on the record itself
        for key, value in record.__dict__.items():
            if key in self.reserved_attributes or key.startswith('_'):
                continue
            try:
                json.dumps(value, allow_nan=False)
                log_data[key] = value
            except (TypeError, ValueError):
                log_data[key] = deep_serialize(value)

        if record.exc_info:
            log_data['exception'] = {
                'type': record.exc_info[0].__name__,
                'message': str(record.exc_info[1]),
                'traceback': self.formatException(record.exc_info)
            }

        return json.dumps(log_data, ensure_ascii=False, default=str)


def setup_loki_logging(config=None):
    """Configure the root logger once: stderr console handler plus optional rotating file"""
    config = config or get_config()
    settings = config.get_logging_config()

    if settings['format'].lower() == 'json':
        formatter = LokiJSONFormatter(config)
    else:
        formatter = logging.Formatter(settings['text_format'], settings['date_format'])

    console_level = getattr(logging, str(settings['level']).upper(), logging.WARNING)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(console_level)

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)
    root_logger.addHandler(console_handler)

    log_file_path = None
    if settings['file_enabled']:
        log_file_path = settings['file_path']
        log_dir = os.path.dirname(log_file_path)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file_path,
            maxBytes=settings['max_bytes'],
            backupCount=settings['backup_count']
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.DEBUG)
        root_logger.addHandler(file_handler)

    # sympy is chatty at DEBUG when the root logger captures everything
    logging.getLogger('sympy').setLevel(logging.WARNING)

    logging.getLogger(__name__).debug(
        f"Logging configured for {config.APP_ENV} environment",
        extra={
            'operation': 'logging_setup',
            'console_level': logging.getLevelName(console_level),
            'log_file': log_file_path,
            'log_format': settings['format'],
        }
    )

    return root_logger


def get_logger(name):
    """Module logger; handlers live on the root logger"""
    root_logger = logging.getLogger()
    if not root_logger.handlers:
        setup_loki_logging()
    return logging.getLogger(name)


def log_performance(operation_name):
    """Log the duration and status of a service call, re-raising failures"""
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            logger = get_logger(func.__module__)
            start = time.perf_counter()

            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.error(
                    f"Performance: {operation_name} failed",
                    extra={
                        'operation': operation_name,
                        'duration_ms': round((time.perf_counter() - start) * 1000, 2),
                        'function': func.__name__,
                        'status': 'error',
                        'error': str(e)
                    }
                )
                raise

            logger.debug(
                f"Performance: {operation_name} completed",
                extra={
                    'operation': operation_name,
                    'duration_ms': round((time.perf_counter() - start) * 1000, 2),
                    'function': func.__name__,
                    'status': 'success'
                }
            )
            return result

        return wrapper
    return decorator


class ContextLogger:
    """Attach fields such as run_id and command to every record emitted inside the block"""

    def __init__(self, logger, **context):
        self.logger = logger
        self.context = context
        self.old_factory = None

    def __enter__(self):
        self.old_factory = logging.getLogRecordFactory()

        def record_factory(*args, **kwargs):
            record = self.old_factory(*args, **kwargs)
            for key, value in self.context.items():
                setattr(record, key, value)
            return record

        logging.setLogRecordFactory(record_factory)
        return self.logger

    def __exit__(self, exc_type, exc_val, exc_tb):
        logging.setLogRecordFactory(self.old_factory)


def log_command_start(logger, run_id, command, **extra_context):
    """Log the start of a CLI command"""
    logger.info(
        f"Starting {command}",
        extra={
            'run_id': run_id,
            'operation': f"{command}_start",
            'phase': 'start',
            **extra_context
        }
    )


def log_command_end(logger, run_id, command, duration_ms=None, **extra_context):
    """Log the end of a CLI command"""
    extra = {
        'run_id': run_id,
        'operation': f"{command}_end",
        'phase': 'end',
        **extra_context
    }

    if duration_ms is not None:
        extra['duration_ms'] = duration_ms

    logger.info(f"Completed {command}", extra=extra)


def log_result_event(logger, event_name, **context):
    """Log a computed result worth keeping in the audit trail"""
    logger.info(
        f"Result: {event_name}",
        extra={
            'operation': 'result_event',
            'event_name': event_name,
            'event_type': 'result',
            **deep_serialize(context)
        }
    )
