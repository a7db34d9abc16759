"""
Configuration settings for the Sofic Class Toolkit
"""

import logging
import os


def _flag(name, default):
    return os.environ.get(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


def _optional_int(name):
    value = os.environ.get(name)
    return int(value) if value else None


class Config:
    """Base configuration class"""

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'INFO'
    LOG_FILE = os.environ.get('LOG_FILE') or None
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

    # Oracle guard: maximum number of candidate cycles enumerated per query
    ORACLE_BUDGET = int(os.environ.get('ORACLE_BUDGET', '1000000'))

    # Cycles at least this long count as infinite; unset means ceil(sqrt(n))
    INF_THRESHOLD = _optional_int('INF_THRESHOLD')

    # Verification suites
    VERIFY_SEED = int(os.environ.get('VERIFY_SEED', '42'))
    VERIFY_MAX_N = int(os.environ.get('VERIFY_MAX_N', '7'))
    VERIFY_SAMPLES = int(os.environ.get('VERIFY_SAMPLES', '10000'))
    VERIFY_MAX_DEGREE = int(os.environ.get('VERIFY_MAX_DEGREE', '10000'))
    VERIFY_ROUND_TRIP_N = int(os.environ.get('VERIFY_ROUND_TRIP_N', '100000'))
    VERIFY_WITNESS_N = int(os.environ.get('VERIFY_WITNESS_N', '100000'))
    VERIFY_TWO_CLASS_N = int(os.environ.get('VERIFY_TWO_CLASS_N', '1000'))
    VERIFY_TWO_CLASS_SAMPLES = int(os.environ.get('VERIFY_TWO_CLASS_SAMPLES', '100'))
    VERIFY_CONJUGATOR_DEGREES = (1000, 10000, 100000)

    # Witness reports carry their parts in one-line notation
    WITNESS_INCLUDE_PARTS = _flag('WITNESS_INCLUDE_PARTS', 'true')

    # HTTP API
    API_HOST = os.environ.get('API_HOST') or '127.0.0.1'
    API_PORT = int(os.environ.get('API_PORT', '5000'))
    CORS_ORIGINS = os.environ.get('CORS_ORIGINS', 'http://localhost:3000').split(',')
    DEBUG = False
    TESTING = False


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True

    # Enable detailed logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'DEBUG'


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True

    LOG_LEVEL = 'WARNING'

    # Smaller suites for tests
    VERIFY_SAMPLES = 20
    VERIFY_MAX_DEGREE = 500
    VERIFY_ROUND_TRIP_N = 5000
    VERIFY_MAX_N = 5
    VERIFY_WITNESS_N = 20000
    VERIFY_TWO_CLASS_SAMPLES = 10
    VERIFY_CONJUGATOR_DEGREES = (1000, 4000)
    ORACLE_BUDGET = 100000


class ProductionConfig(Config):
    """Production configuration"""

    # Production logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'WARNING'
    WITNESS_INCLUDE_PARTS = _flag('WITNESS_INCLUDE_PARTS', 'false')


# Configuration mapping
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': Config,
}


def get_config():
    """Get configuration based on environment"""
    env = os.environ.get('SOFIC_ENV', 'default')
    return config.get(env, config['default'])


def configure_logging(cfg, level=None):
    """Send log records to LOG_FILE, or to stderr; stdout stays reserved for results"""
    handler = logging.FileHandler(cfg.LOG_FILE) if cfg.LOG_FILE else logging.StreamHandler()
    handler.setFormatter(logging.Formatter(cfg.LOG_FORMAT))
    handler.sofic_toolkit = True
    root = logging.getLogger()
    for existing in list(root.handlers):
        if getattr(existing, 'sofic_toolkit', False):
            root.removeHandler(existing)
            existing.close()
    root.addHandler(handler)
    root.setLevel((level or cfg.LOG_LEVEL).upper())
