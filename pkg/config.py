import os
from typing import Dict, Any


class Config:
    """Base application configuration"""
    APP_VERSION = os.environ.get('APP_VERSION', '1.0.0')
    APP_TITLE = os.environ.get('APP_TITLE', 'plane-branch-toolkit')
    APP_DESCRIPTION = os.environ.get(
        'APP_DESCRIPTION',
        'Exact Saito-basis verification and minimal Tjurina numbers for plane branches'
    )
    APP_ENV = os.environ.get('APP_ENV', 'development')

    DEBUG = os.environ.get('APP_DEBUG', 'False').lower() == 'true'
    TESTING = False

    # JSON report settings
    REPORT_SCHEMA_VERSION = '1.0'

    # Colength engine settings
    COLENGTH_CAP = int(os.environ.get('COLENGTH_CAP', 512))
    COLENGTH_MIN_DEGREE = int(os.environ.get('COLENGTH_MIN_DEGREE', 2))

    # Worker pool (scan classes, concurrent colength calls in verify)
    MAX_SCAN_WORKERS = int(os.environ.get('MAX_SCAN_WORKERS', 4))

    # Scan defaults
    SCAN_MAX_BETA0 = int(os.environ.get('SCAN_MAX_BETA0', 12))
    SCAN_MAX_BETA1 = int(os.environ.get('SCAN_MAX_BETA1', 30))
    SCAN_MAX_PAIRS = int(os.environ.get('SCAN_MAX_PAIRS', 2))

    # Genericity sampler defaults
    SAMPLE_COUNT = int(os.environ.get('SAMPLE_COUNT', 20))
    SAMPLE_SEED = int(os.environ.get('SAMPLE_SEED', 0))
    SAMPLE_COEFFICIENT_RANGE = int(os.environ.get('SAMPLE_COEFFICIENT_RANGE', 9))

    # Logging settings
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')
    LOG_FORMAT = os.environ.get('LOG_FORMAT', 'json')
    LOG_TEXT_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
    LOG_DATE_FORMAT = os.environ.get('LOG_DATE_FORMAT', '%Y-%m-%d %H:%M:%S')
    LOG_FILE_ENABLED = os.environ.get('LOG_FILE_ENABLED', 'False').lower() == 'true'
    LOG_FILE_PATH = os.environ.get('LOG_FILE_PATH', 'logs/toolkit.jsonl')
    LOG_MAX_BYTES = int(os.environ.get('LOG_MAX_BYTES', 10485760))  # 10MB
    LOG_BACKUP_COUNT = int(os.environ.get('LOG_BACKUP_COUNT', 5))

    # Loki labels are attached to every JSON line when enabled
    LOKI_ENABLED = os.environ.get('LOKI_ENABLED', 'False').lower() == 'true'
    LOKI_LABELS = {
        'app': 'plane_branch_toolkit',
        'env': os.environ.get('APP_ENV', 'development'),
        'service': 'cli'
    }

    @classmethod
    def get_engine_config(cls) -> Dict[str, Any]:
        """Get configuration for the colength engine and the analytic services"""
        return {
            'colength_cap': cls.COLENGTH_CAP,
            'min_degree': cls.COLENGTH_MIN_DEGREE,
            'max_workers': cls.MAX_SCAN_WORKERS,
        }

    @classmethod
    def get_scan_config(cls) -> Dict[str, Any]:
        """Get defaults for the class scan"""
        return {
            'max_beta0': cls.SCAN_MAX_BETA0,
            'max_beta1': cls.SCAN_MAX_BETA1,
            'max_pairs': cls.SCAN_MAX_PAIRS,
            'jobs': cls.MAX_SCAN_WORKERS,
        }

    @classmethod
    def get_sample_config(cls) -> Dict[str, Any]:
        """Get defaults for the genericity sampler"""
        return {
            'samples': cls.SAMPLE_COUNT,
            'seed': cls.SAMPLE_SEED,
            'coefficient_range': cls.SAMPLE_COEFFICIENT_RANGE,
        }

    @classmethod
    def get_logging_config(cls) -> Dict[str, Any]:
        """Get logging configuration"""
        return {
            'level': cls.LOG_LEVEL,
            'format': cls.LOG_FORMAT,
            'text_format': cls.LOG_TEXT_FORMAT,
            'date_format': cls.LOG_DATE_FORMAT,
            'file_enabled': cls.LOG_FILE_ENABLED,
            'file_path': cls.LOG_FILE_PATH,
            'max_bytes': cls.LOG_MAX_BYTES,
            'backup_count': cls.LOG_BACKUP_COUNT,
            'loki_labels': cls.LOKI_LABELS if cls.LOKI_ENABLED else None,
        }


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    TESTING = False

    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    MAX_SCAN_WORKERS = int(os.environ.get('MAX_SCAN_WORKERS', 2))

    APP_ENV = 'development'


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    DEBUG = False

    # Keep test runs quiet and side-effect free
    LOG_LEVEL = 'WARNING'
    LOG_FILE_ENABLED = False
    LOKI_ENABLED = False

    MAX_SCAN_WORKERS = 1
    SAMPLE_COUNT = 5

    APP_ENV = 'testing'


class StagingConfig(Config):
    """Staging configuration"""
    DEBUG = False
    TESTING = False

    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'DEBUG')
    LOG_FILE_ENABLED = os.environ.get('LOG_FILE_ENABLED', 'True').lower() == 'true'
    MAX_SCAN_WORKERS = int(os.environ.get('MAX_SCAN_WORKERS', 3))

    APP_ENV = 'staging'


class ProductionConfig(Config):
    """Production configuration (batch scans on shared hosts)"""
    DEBUG = False
    TESTING = False

    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    LOG_FILE_ENABLED = os.environ.get('LOG_FILE_ENABLED', 'True').lower() == 'true'
    MAX_SCAN_WORKERS = int(os.environ.get('MAX_SCAN_WORKERS', 8))
    LOKI_ENABLED = os.environ.get('LOKI_ENABLED', 'True').lower() == 'true'

    APP_ENV = 'production'

    @classmethod
    def validate_production_config(cls):
        """Validate that the engine settings are usable"""
        invalid = [
            name for name in ('COLENGTH_CAP', 'MAX_SCAN_WORKERS')
            if getattr(cls, name) < 1
        ]
        if invalid:
            raise ValueError(
                f"Settings must be positive integers in production: {', '.join(invalid)}"
            )
        if cls.COLENGTH_CAP < cls.COLENGTH_MIN_DEGREE:
            raise ValueError("COLENGTH_CAP must not be below COLENGTH_MIN_DEGREE")


# Configuration mapping
config_by_name = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'staging': StagingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig
}


def get_config(config_name: str = None) -> Config:
    """
    Get configuration by name

    Args:
        config_name: Configuration name (development, testing, staging, production)

    Returns:
        Configuration class
    """
    if not config_name:
        config_name = os.environ.get('APP_ENV', 'development')

    config_class = config_by_name.get(config_name, DevelopmentConfig)

    if config_name == 'production':
        config_class.validate_production_config()

    return config_class
