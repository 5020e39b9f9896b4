import os
from dotenv import load_dotenv

load_dotenv()


def _env_bool(name, default):
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    """Base configuration."""

    # Brute-force oracle: 2^25 configurations is still seconds of numpy work
    ORACLE_MAX_FREE_VERTICES = int(os.getenv('ORACLE_MAX_FREE_VERTICES', '25'))
    ORACLE_CHUNK_BITS = int(os.getenv('ORACLE_CHUNK_BITS', '16'))

    # Full SAW expansion refuses trees larger than this
    SAW_NODE_BUDGET = int(os.getenv('SAW_NODE_BUDGET', '2000000'))

    RESULTS_DIR = os.getenv('RESULTS_DIR', 'results')
    GOLDEN_DIR = os.path.join(RESULTS_DIR, 'golden')

    DEFAULT_SEED = int(os.getenv('DEFAULT_SEED', '0'))
    JOBS = int(os.getenv('JOBS', '1'))
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')

    # Redis for Celery batch runs
    REDIS_URL = os.getenv('REDIS_URL', 'redis://localhost:6379/0')
    CELERY_BROKER_URL = REDIS_URL
    CELERY_RESULT_BACKEND = REDIS_URL
    # Without an explicit broker, tasks run in-process
    CELERY_TASK_ALWAYS_EAGER = _env_bool('CELERY_TASK_ALWAYS_EAGER', 'REDIS_URL' not in os.environ)
    CELERY_TASK_TIME_LIMIT = int(os.getenv('CELERY_TASK_TIME_LIMIT', '3600'))


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True


class TestingConfig(Config):
    """Testing configuration."""
    DEBUG = True
    CELERY_TASK_ALWAYS_EAGER = True
    ORACLE_MAX_FREE_VERTICES = 25
    SAW_NODE_BUDGET = 500000


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False


config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig
}


def get_config(config_name=None):
    """Resolve the active configuration class (FERRO2SPIN_ENV when no name is given)."""
    if config_name is None:
        config_name = os.getenv('FERRO2SPIN_ENV', 'default')
    return config.get(config_name, config['default'])
