from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class KnotsConfig(AppConfig):
    name = "grid_atlas.knots"
    verbose_name = _("Knots")
