import configparser
import datetime
import pathlib
import re
from typing import Optional

project_root = pathlib.Path(__file__).parent.parent.resolve()


def read_setup_cfg() -> configparser.ConfigParser:
    """
    Package metadata from `setup.cfg`.
    """
    cfg = configparser.ConfigParser()
    with (project_root / "setup.cfg").open(mode="r") as f:
        cfg.read_file(f)
    return cfg


def read_version(name: str) -> Optional[str]:
    """
    Version recorded by pbr in `<name>.egg-info/PKG-INFO`, or None if the package was never built.
    """
    info_path = project_root / f"{name}.egg-info" / "PKG-INFO"
    if not info_path.exists():
        return None
    m = re.search(r"^Version: (.+)$", info_path.read_text(), flags=re.MULTILINE)
    return None if m is None else m.group(1).strip()


# -- Project information -----------------------------------------------------
cfg = read_setup_cfg()
project = cfg.get("metadata", "name")
author = cfg.get("metadata", "author", fallback="pybiclique developers")
copyright = f"{datetime.date.today().year}, {author}"
version = release = read_version(project) or "dev"

# -- General configuration ---------------------------------------------------
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
master_doc = "index"
exclude_patterns = []
pygments_style = "sphinx"
add_module_names = False

# -- Options for HTML output -------------------------------------------------
html_theme = "sphinx_rtd_theme"
html_theme_options = {"navigation_depth": -1, "titles_only": False}

# -- Options for HTMLHelp output ---------------------------------------------
htmlhelp_basename = "pybiclique"

# -- Extension configuration -------------------------------------------------
# -- Options for autosummary extension ---------------------------------------
autosummary_generate = True

# -- Options for autodoc extension -------------------------------------------
autodoc_member_order = "bysource"
autodoc_default_flags = [
    "members",
    # 'inherited-members',
    "show-inheritance",
]
autodoc_inherit_docstrings = True

# -- Options for intersphinx extension ---------------------------------------
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "NumPy [latest]": ("https://docs.scipy.org/doc/numpy/", None),
    "SciPy [latest]": ("https://docs.scipy.org/doc/scipy/reference", None),
    "pandas": ("http://pandas.pydata.org/pandas-docs/stable/", None)
}

# -- Options for napoleon extension ------------------------------------------
napoleon_google_docstring = False
napoleon_numpy_docstring = True

# -- Options for doctest extension -------------------------------------------
doctest_global_setup = "import warnings"

# -- Options for todo extension ----------------------------------------------
todo_include_todos = True
