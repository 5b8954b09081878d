import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'jsbo_workbench.settings')
django.setup()
