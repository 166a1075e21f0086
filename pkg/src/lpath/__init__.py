"""Hamiltonian and longest (s,t)-paths in rectangular and L-shaped
supergrid graphs, with an exhaustive oracle, a CLI, and an HTTP service.

Modules are imported explicitly (`from lpath import grid, rect, ...`);
this package root only carries the version.
"""

from importlib import metadata

try:
    __version__ = metadata.version("lpath")
except metadata.PackageNotFoundError:  # running from a source checkout
    __version__ = "0.1.0"
