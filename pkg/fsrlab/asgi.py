"""ASGI entry point for the fsrlab JSON endpoints."""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "fsrlab.settings")

application = get_asgi_application()
