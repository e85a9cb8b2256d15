"""Cordial labelings, cordial deficits and cordial edge/vertex deficiencies of graphs."""

from .closed_forms import (
    ced_multipartite,
    cvd_complete,
    is_cordial_multipartite,
    net_multipartite_deficit,
    square_form,
    theorem5_labeling,
)
from .errors import CordialError, ResourceLimitError
from .graph import (
    JoinSpec,
    Multigraph,
    PartSpec,
    complete,
    complete_multipartite,
    cycle,
    edgeless,
    lee_liu_join,
    path,
    tensor_product,
)
from .labeling import DeficitReport, deficit_report, induced_edge_labeling, is_friendly
from .search import (
    DeficiencyValue,
    PartCountLabeling,
    balance_optimize,
    balance_switch,
    ced_exhaustive,
    cvd_exhaustive,
    find_cordial_labeling,
    min_friendly_deficit,
    multipartite_min_deficit,
)
from .tensor import decompose_tensor, theorem6_check

__version__ = "0.1.0"
