"""
Django settings for the jsbo_workbench project.

The workbench has no database and no web surface: Django provides the
settings layer, management commands and the test runner, and Django REST
Framework provides serializers and the JSON renderer.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: the key is unused without sessions, but Django requires one.
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-jsbo-workbench-local-only')

DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = os.getenv('ALLOWED_HOSTS', 'localhost').split(',')


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'jsbo',
]

MIDDLEWARE = []


# Database
# Everything is computed in memory; nothing is persisted.

DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework configuration
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}


# Workbench configuration

# Upper bound on worker threads for verification fan-out
JSBO_THREADS = max(1, int(os.getenv('JSBO_THREADS', '1')))

# Seed for randomized identity suites; --seed overrides it
JSBO_SEED = int(os.getenv('JSBO_SEED', '42'))

# Sampled bracket checks per calibration candidate on larger domains
JSBO_CALIBRATION_BUDGET = int(os.getenv('JSBO_CALIBRATION_BUDGET', '400'))

# Generic rational weight for checks run in rational mode
JSBO_DEFAULT_LAMBDA = os.getenv('JSBO_DEFAULT_LAMBDA', '37/5')

JSBO_LOG_LEVEL = os.getenv('JSBO_LOG_LEVEL', 'WARNING').upper()


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'jsbo': {
            'handlers': ['stderr'],
            'level': JSBO_LOG_LEVEL,
            'propagate': False,
        },
    },
}
