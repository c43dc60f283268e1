from django.conf import settings
import django

from fractions import Fraction
import os

DEFAULTS = {
    'PSEUDOLINES_MAX_ENUMERATION_N': 5,
    'PSEUDOLINES_ALLOW_N6': False,
    'PSEUDOLINES_PATH_CAP': 10 ** 6,
    'PSEUDOLINES_SHORTEST_PATHS_MAX_N': 6,
    'PSEUDOLINES_ISOMORPHISM_MAX_VERTICES': 21,
    'PSEUDOLINES_CONSTRUCTION_RETRIES': 32,
    'PSEUDOLINES_EXPENSIVE_CLAIMS_MAX_N': 5,
    'PSEUDOLINES_SVG_SIZE': 480,
    'PSEUDOLINES_SVG_MARGIN': Fraction(1, 20),
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {'format': '%(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        'console': {'class': 'logging.StreamHandler', 'formatter': 'plain'},
    },
    'loggers': {
        'pseudolines': {'handlers': ['console'], 'level': os.environ.get('PSEUDOLINES_LOG_LEVEL', 'WARNING')},
    },
}

def get_setting(name):
    """
    Returns the value of a PSEUDOLINES_* setting, falling back to the library default
    when the project does not define it (or when Django settings are not configured at all).
    """
    default = DEFAULTS[name]
    if not settings.configured:
        return default
    return getattr(settings, name) if hasattr(settings, name) else default

def configure(**overrides):
    """
    Standalone setup for scripts, the command line and the test-suite.
    Does nothing if the settings were already configured by a host project.
    """
    if settings.configured:
        return
    options = {
        'INSTALLED_APPS': ['pseudolines'],
        'TEMPLATES': [{
            'BACKEND': 'django.template.backends.django.DjangoTemplates',
            'APP_DIRS': True,
            'OPTIONS': {'autoescape': True},
        }],
        'LOGGING': LOGGING,
        'USE_TZ': True,
    }
    options.update(overrides)
    settings.configure(**options)
    django.setup()

def resolved_settings():
    return {name: get_setting(name) for name in DEFAULTS}

def configure_worker(values):
    """
    Process pool initializer: the worker sees the parent's PSEUDOLINES_* values whatever the start method.
    """
    configure()
    for name, value in values.items():
        setattr(settings, name, value)
