"""Exact sl(3) Khovanov homology of oriented spatial webs.

The pipeline: a diagram code is parsed into a web diagram with signed
crossings; resolutions are closed planar trivalent bipartite webs; closed
foams (movies of elementary cobordisms) are evaluated to integers; the
cube of resolutions gives a bigraded integer chain complex whose homology,
module action and pointed (Koszul-twisted) variants are computed with
exact arithmetic.
"""

from .errors import InternalError, MoveError, ValidationError
from .webs import Web
from .diagrams import WebDiagram, parse_diagram, ReidemeisterMove, apply_move
from .foams import PreFoam, evaluate
from .movies import Movie, assemble, movie_degree

__all__ = [
    "InternalError",
    "MoveError",
    "ValidationError",
    "Web",
    "WebDiagram",
    "parse_diagram",
    "ReidemeisterMove",
    "apply_move",
    "PreFoam",
    "evaluate",
    "Movie",
    "assemble",
    "movie_degree",
]
