"""Exact verification of module coalgebras and equivariant bicomodules.

Thin wrapper re-exporting the compiled module; all operations take documents
in the textual structure-constants format (see the repository README).
"""

try:
    from hsc._hsc import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _hsc import *  # noqa: F401,F403  (build-tree layout)
