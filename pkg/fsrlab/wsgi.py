"""
WSGI entry point for the fsrlab JSON endpoints.

Serve with ``gunicorn fsrlab.wsgi``; the synthesis endpoints live under /api/.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "fsrlab.settings")

application = get_wsgi_application()
