#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# comkit documentation build configuration file.

import os
import sys

# Make the package importable from the source tree.
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import comkit  # noqa: E402

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'comkit'
copyright = u"2026, comkit developers"

version = comkit.__version__
release = comkit.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'comkitdoc'

latex_documents = [
    ('index', 'comkit.tex', u'comkit Documentation', u'comkit developers', 'manual'),
]

man_pages = [
    ('index', 'comkit', u'comkit Documentation', [u'comkit developers'], 1)
]
