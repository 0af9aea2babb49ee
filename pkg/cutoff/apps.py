from django.apps import AppConfig


class CutoffConfig(AppConfig):
    name = 'cutoff'
