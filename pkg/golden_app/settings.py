"""
Django settings for golden_app project.

The project has no database, no URLs and no web server: Django provides the
settings layer, logging configuration, template engine (SVG figures),
management commands (the command-line surface) and the test runner.

Every knob below can be overridden from the environment or a local .env file.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'golden-app-local-key')

DEBUG = os.environ.get('DEBUG', 'False').lower() in ['true', '1', 'yes']

# Application definition
INSTALLED_APPS = [
    'exact_arith',
    'fibonacci',
    'cutoff',
    'tiling',
    'render',
    'cli',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'autoescape': True,
        },
    },
]

# Nothing is persisted; tests are SimpleTestCase only.
DATABASES = {}

USE_I18N = False
USE_TZ = True
TIME_ZONE = 'UTC'

# ============================================
# PAVING SETTINGS
# ============================================

# Safety net for classify; any ratio other than the golden one fails in finitely many steps.
PAVING_CLASSIFY_BUDGET = int(os.environ.get('PAVING_CLASSIFY_BUDGET', '1000000'))

PAVING_RENDER_SCALE = int(os.environ.get('PAVING_RENDER_SCALE', '10'))
PAVING_RENDER_PALETTE = os.environ.get('PAVING_RENDER_PALETTE', 'classic')
PAVING_RENDER_STROKE_WIDTH = int(os.environ.get('PAVING_RENDER_STROKE_WIDTH', '1'))

# Digits of sqrt(5) used when a Q(sqrt5) tiling is drawn on the pixel grid
PAVING_SQRT5_DIGITS = int(os.environ.get('PAVING_SQRT5_DIGITS', '50'))

PAVING_LOG_LEVEL = os.environ.get('PAVING_LOG_LEVEL', 'WARNING').upper()

# Logging configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': os.getenv('DJANGO_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
        **{
            app: {
                'handlers': ['console'],
                'level': PAVING_LOG_LEVEL,
                'propagate': False,
            }
            for app in ('exact_arith', 'fibonacci', 'cutoff', 'tiling', 'render', 'cli')
        },
    },
}
