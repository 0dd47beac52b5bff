from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class FloerConfig(AppConfig):
    name = "grid_atlas.floer"
    verbose_name = _("Floer")
