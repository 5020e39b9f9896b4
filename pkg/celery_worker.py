"""
Celery Worker Configuration
Batch cells for approximation sweeps, mixing trials and threshold landscapes
"""
import logging
import os
import sys

# Add the current directory to Python path for module imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from celery import Celery
from celery.signals import setup_logging

from config import get_config

settings = get_config()

# Initialize Celery
celery = Celery('ferro2spin')

# Configure from environment
celery.conf.update(
    broker_url=settings.CELERY_BROKER_URL,
    result_backend=settings.CELERY_RESULT_BACKEND,
    task_serializer='json',
    accept_content=['json'],
    result_serializer='json',
    timezone='UTC',
    enable_utc=True,
    task_track_started=True,
    task_time_limit=settings.CELERY_TASK_TIME_LIMIT,
    worker_prefetch_multiplier=1,
    task_acks_late=True,
    task_always_eager=settings.CELERY_TASK_ALWAYS_EAGER,
    task_eager_propagates=True,
)


@setup_logging.connect
def configure_logging(**kwargs):
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
        format="%(asctime)s - %(levelname)s - %(message)s",
    )


# Import experiment tasks to register them with Celery
import ferro2spin.experiments.tasks  # noqa: E402,F401
