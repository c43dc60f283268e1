from django import template
from django.utils.safestring import mark_safe

register = template.Library()

@register.filter
def coord(value):
    """
    Canvas coordinate with two decimals; trailing zeros are kept so the output is stable.
    """
    return '%.2f' % float(value)

@register.filter
def points(path):
    return ' '.join('%.2f,%.2f' % (float(x), float(y)) for x, y in path)

@register.simple_tag()
def vertex_classes(vertex):
    classes = ['vertex']
    if vertex.get('outer'):
        classes.append('outer')
    if vertex.get('diametrical'):
        classes.append('diametrical')
    return ' '.join(classes)

@register.filter
def dot_id(label):
    # DOT identifiers may not contain commas unless quoted
    return mark_safe('"%s"' % label)
