"""
Django settings for sobomark_project project.

Generated by 'django-admin startproject' using Django 5.2.5.

The project has no database, URLs or templates: the `core` app is driven
through management commands (embed, extract, attack, evaluate, verify,
presets, basis). Numerical tunables live in the SOBOMARK dict below and
are read through core.conf.sobomark_setting().

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'SOBOMARK_SECRET_KEY',
    'django-insecure-0c7n$s!r2h9x@w#q1m^e4b+z8k5t&v6y(u3p)o-l_j=f%g*d',
)

DEBUG = os.environ.get('SOBOMARK_DEBUG', '') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'core',
]

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Moments and watermarking

SOBOMARK = {
    # polynomial families and Sobolev corrections
    'N_MAX': 16,
    'DELTA_CD': 1e-6,
    'EPS_ID': 1e-9,
    'TAIL_TOLERANCE': 1e-18,
    'TAIL_RUN': 8,
    'TAIL_CAP': 10000,
    'EXTRA_DIGITS': 30,
    # blocks and payload
    'BLOCK_SIZE': 8,
    'WATERMARK_SIDE': 64,
    'COEFF_INDEX': 28,
    'CHANNELS': 'blue',
    'FRAGILE_BITS': 16,
    # chaotic scrambler
    'PWLCM_NUDGE': 1e-13,
    'PERMUTATION_BUDGET': 64,
    # evaluation
    'THREADS': int(os.environ.get('SOBOMARK_THREADS') or os.cpu_count() or 1),
    'PRESET_DIR': os.environ.get('SOBOMARK_PRESET_DIR', ''),
}


# Logging
# https://docs.djangoproject.com/en/5.2/topics/logging/

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
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'core': {
            'handlers': ['console'],
            'level': os.environ.get('SOBOMARK_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}
