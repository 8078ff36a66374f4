# -*- coding: utf-8 -*-
#
# kazcert documentation build configuration file; the manual page is
# built with "sphinx-build -b man docs docs/_build/man".

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from kazcert import VERSION  # noqa: E402

# -- General configuration

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'kazcert-man'

project = u'kazcert'
copyright = u'Manual page (C) 2026, kazcert contributors'

version = VERSION
release = VERSION

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output

html_theme = 'default'
htmlhelp_basename = 'kazcertdoc'

# -- Options for manual page output

man_pages = [
    ('kazcert-man', 'kazcert',
     u'exact sum-of-squares certificates for Kazhdan property (T)',
     [u'kazcert contributors'], 1)
]
