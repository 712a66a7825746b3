"""Waveguide-QED spectroscopy toolkit.

Forward reflection/transmission spectra for emitter chains coupled to a 1D
waveguide, spectral feature extraction, separation/decay-rate inversion, and
strain/temperature sensing figures.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-build tree: module sits next to the package
    from _core import *  # noqa: F401,F403

__version__ = "0.1.0"
