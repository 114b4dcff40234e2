"""Rectangular tableaux and divisor classes on chain-of-loops graphs."""

from .divisors import (
    DivisorSeq,
    Reflection,
    ReductionState,
    UnderlineSeq,
    alpha,
    degree,
    dual_reduce,
    dual_via_tableau,
    make_divisor,
    make_underline,
    phi,
    phi_prime_ev,
    rank,
    raw_to_underline,
    recenter_step,
    reflect_divisor,
    rho,
    sigma_formula,
    simulate_reflection,
    underline_to_raw,
    z_sequence,
)
from .errors import InvariantViolation, NonGenericGraphError, ShapeMismatchError
from .graph_core import (
    ChainOfLoops,
    Loop,
    canonical_divisor,
    default_chain,
    is_generic,
    make_chain,
    reflect_graph,
    uniform_chain,
)
from .paths import (
    DownAll,
    LatticePath,
    Linger,
    Up,
    classify_steps,
    is_in_weyl,
    is_lingering_path,
    is_non_lingering,
    path_to_tableau,
    tableau_to_path,
)
from .tableaux import (
    RectTableau,
    cell_stats,
    count_at_most_in_col,
    enumerate_tableaux,
    evacuate,
    hook_count,
    transpose,
    validate,
)
