from django.apps import AppConfig

class PseudolinesConfig (AppConfig):
    name = 'pseudolines'
    verbose_name = 'Pseudoline arrangements'
