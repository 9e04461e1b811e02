"""Configure Django before pytest collects the binmach test modules."""
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "fsrlab.settings")
django.setup()
