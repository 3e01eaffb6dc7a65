"""Exact combinatorics toolkit for inversion graphs of permutations.

Submodules: perms (Lehmer codes, patterns, symmetries), graphs (canonical
forms, graph6, catalogs), invgraph (inversion graphs, recognition), prime
(modules, chains, orientations), pins (pin sequences), letters (lettericity),
grid (grid drawings), permletters (permutation letter graphs), reflect (edge
reflections), experiments, acceptance.
"""

__version__ = "0.1.0"

from .graphs import Graph, canonical_form, generate_all_graphs, is_isomorphic
from .invgraph import inversion_graph, recognize
from .kernels import BACKEND as KERNEL_BACKEND
from .letters import Lettering, decode, lettericity_exact
from .perms import lehmer_decode, lehmer_encode, parse_perm
from .permletters import PermLettering, decode_perm, ell_perm_exact
from .reflect import Reflection, apply_reflection, bfs_to_edgeless

__all__ = [
    "Graph",
    "KERNEL_BACKEND",
    "Lettering",
    "PermLettering",
    "Reflection",
    "apply_reflection",
    "bfs_to_edgeless",
    "canonical_form",
    "decode",
    "decode_perm",
    "ell_perm_exact",
    "generate_all_graphs",
    "inversion_graph",
    "is_isomorphic",
    "lehmer_decode",
    "lehmer_encode",
    "lettericity_exact",
    "parse_perm",
    "recognize",
]
