"""Figure rendering for the Schwinger-model information-lattice simulator.

Consumes the simulator's CSV interchange tables and produces the six
paper-style figure kinds; see `specs.FigureSpec` and `render.render`.
"""

__version__ = "0.1.0"

from .render import RENDERERS, RenderResult, render
from .schemas import (SchemaError, Table, read_info_lattice, read_peak_scale,
                      read_scale_profile, read_spacetime, read_spectrum)
from .specs import KINDS, FigureSpec, SpecError, load_specs

__all__ = [
    "RENDERERS", "RenderResult", "render",
    "SchemaError", "Table", "read_info_lattice", "read_peak_scale",
    "read_scale_profile", "read_spacetime", "read_spectrum",
    "KINDS", "FigureSpec", "SpecError", "load_specs",
    "__version__",
]
