from django.apps import AppConfig


class FibonacciConfig(AppConfig):
    name = 'fibonacci'
