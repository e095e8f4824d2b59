"""Large induced trees in connected triangle-free and bipartite graphs."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Graph,
    GraphError,
    LevelDecomposition,
    bfs_levels,
    from_edge_list,
    greedy_independent_set,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_forest,
    is_induced_tree,
    is_triangle_free,
    max_degree,
)
from .formats import parse_graph6, write_graph6, parse_edge_list, write_edge_list  # noqa: E402
from .lemmas import BipartiteView, SelectionOutcome, select_up_forest, split_is_or_im  # noqa: E402
from .extractor import (  # noqa: E402
    default_target_size,
    extract_bipartite,
    extract_triangle_free,
    verify_certificate,
)
from .exact import (  # noqa: E402
    independence_number,
    max_induced_tree,
    max_induced_tree_naive,
    max_up_growing_top_count,
)
from .generators import blow_up, path_of_bicliques  # noqa: E402
