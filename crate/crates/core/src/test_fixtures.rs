//! Graph fixtures shared by unit tests across modules.

use crate::graph_model::{parse_graph, LabelledGraph};

/// Four vertices; regular edges v1-v2 (label 1), v3-v2 (2), v2-v4 (3) and a
/// dotted edge v3-v4 (6). Written so the default orientation reproduces the
/// incidence vectors (1,-1,0,0), (0,-2,2,0), (0,3,0,-3) and (0,0,6,-6).
pub(crate) fn labelgraph_example() -> LabelledGraph {
    parse_graph(
        "V v1\nV v2\nV v3\nV v4\n\
         E R v1 v2 1\nE R v3 v2 2\nE R v2 v4 3\nE D v3 v4 6\n",
    )
    .unwrap()
}

/// Three vertices; parallel regular edges v1-v2 labelled 2 and 3 (the second
/// one written reversed), one dotted edge v2-v3 labelled 2.
pub(crate) fn color_example() -> LabelledGraph {
    parse_graph(
        "V v1\nV v2\nV v3\n\
         E R v1 v2 2\nE R v2 v1 3\nE D v2 v3 2\n",
    )
    .unwrap()
}

/// No regular edges; dotted chain v1-v2 (label 2), v3-v2 (label 6).
pub(crate) fn dotted_chain_example() -> LabelledGraph {
    parse_graph("V v1\nV v2\nV v3\nE D v1 v2 2\nE D v3 v2 6\n").unwrap()
}

/// Triangle with unit labels and no dotted edges.
pub(crate) fn triangle_example() -> LabelledGraph {
    parse_graph("V a\nV b\nV c\nE R a b 1\nE R b c 1\nE R c a 1\n").unwrap()
}
