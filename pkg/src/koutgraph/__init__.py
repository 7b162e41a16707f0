"""Random K-out graphs: construction, node deletion, connectivity,
r-robustness, threshold formulas and Monte Carlo sweeps."""

__version__ = "0.1.0"

from .components import (ComponentLabeling, CutReport, UnionFind, connected_components,
                         enumerate_cuts, is_connected, largest_component_size,
                         nodes_outside_giant, verify_giant_lemma)
from .errors import CapacityError, FormatError, KoutError, ParameterError, UnsupportedParameterError
from .graph import (DeletionRecord, GraphStats, SelectionTable, UGraph, delete_bernoulli,
                    delete_nodes, delete_random_nodes, generate_er, generate_kout, graph_stats,
                    kout_from_selections, matched_er_probability, selection_table)
from .io import export_edgelist, import_edgelist, read_edgelist, write_edgelist
from .rng import derive_trial_seed, make_rng
from .robustness import (RobustnessVerdict, is_r_reachable, is_r_robust_bruteforce,
                         max_robustness, vertex_connectivity_bruteforce)
