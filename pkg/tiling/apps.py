from django.apps import AppConfig


class TilingConfig(AppConfig):
    name = 'tiling'
