import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'golden_app.settings')
django.setup()
