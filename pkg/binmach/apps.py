from django.apps import AppConfig


class BinmachConfig(AppConfig):
    name = "binmach"
    verbose_name = "Binary machine synthesis"
