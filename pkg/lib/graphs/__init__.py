"""2-pointed graphs: graph languages of terms, homomorphisms, quotients and
saturations

Classes:
    Graph
        an immutable 2-pointed graph labelled by a, a-, I and I-

Functions:
    series(g, h), parallel(g, h), converse(g):
        the graph operations
    glang(t, budget):
        the members of the graph language of a term up to a vertex budget
    graph_of_word(w):
        the path graph of a word
    homomorphism_exists(src, dst):
        a homomorphism of 2-pointed graphs, or None
    equivalence_closure(r), quotient(g):
        the I classes and the quotient graph
    is_consistent(g), is_edge_saturated(g):
        the saturation conditions
    saturations(g), qs(g):
        every saturation of a graph, and their quotients
    census(t, budget):
        the saturation quotients of a graph language counted by size
    structure_of(g):
        the pointed structure of an edge-saturated graph
    find_quotient_saturation(g, judge):
        the first saturation quotient accepted by a judge
"""

from .graph import (
    CANONICAL_LIMIT, Graph, isomorphic, point_graph, top_graph, edge_graph,
    series, parallel, converse, graph_of_structure,
)
from .language import glang, graph_of_word
from .homomorphism import homomorphism_exists, is_homomorphism
from .saturation import (
    Judge, equivalence_closure, quotient, quotient_map, is_consistent, is_edge_saturated,
    structure_of, search_quotient_saturations, find_quotient_saturation, lift,
    saturations, qs, census, term_judge, homomorphism_judge,
)
