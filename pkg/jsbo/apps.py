from django.apps import AppConfig


class JsboConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'jsbo'
    verbose_name = 'Jordan triple symmetry breaking operators'
