"""K-groups of ample groupoids from semilattice cover systems.

Thin re-export of the compiled module; all values cross the boundary as the
same JSON-shaped dicts the command-line tool emits.
"""

try:
    from ._zerok import (
        InputError,
        RefusalError,
        StructureError,
        check_covers,
        graph_complex,
        graph_ktheory,
        homology,
        ktheory,
        nq_ktheory,
        raam_ktheory,
        tiling_ktheory,
    )
except ImportError:  # development layout: extension built next to the sources
    from _zerok import (
        InputError,
        RefusalError,
        StructureError,
        check_covers,
        graph_complex,
        graph_ktheory,
        homology,
        ktheory,
        nq_ktheory,
        raam_ktheory,
        tiling_ktheory,
    )

__all__ = [
    "InputError",
    "RefusalError",
    "StructureError",
    "check_covers",
    "graph_complex",
    "graph_ktheory",
    "homology",
    "ktheory",
    "nq_ktheory",
    "raam_ktheory",
    "tiling_ktheory",
]
