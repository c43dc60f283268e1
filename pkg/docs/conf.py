# -*- coding: utf-8 -*-
#
# Pseudolines documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# The package lives one directory up.
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosectionlabel',
]

templates_path = ['_templates']

# autodoc imports the management commands and the template tags, which need settings.
from pseudolines import conf
conf.configure()

import pseudolines

source_suffix = '.rst'

master_doc = 'index'

project = u'Pseudolines'
copyright = u'2026, Pseudolines developers'

# The short X.Y version.
version = '.'.join(str(part) for part in pseudolines.__version_info__[:2])
# The full version, including alpha/beta/rc tags.
release = pseudolines.__version__

exclude_patterns = ['_build']

pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'

html_static_path = []

htmlhelp_basename = 'Pseudolinesdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'Pseudolines.tex', u'Pseudolines Documentation',
   u'Pseudolines developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'pseudolines', u'Pseudolines Documentation',
     [u'Pseudolines developers'], 1)
]
