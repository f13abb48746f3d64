"""Graph-minor workbench around K9^= minors, cockades and Kempe chains."""

from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    MinorStep,
    complement,
    from_graph6,
    independence_number,
    induced_subgraph,
    minor_step,
    named_graph,
    to_graph6,
)

__version__ = "0.1.0"
