"""etaq: nilpotent commuting variables, multiqubit trigonometric states,
and exact four-qubit entanglement invariants."""

from .algebra import (
    AmplitudeVector,
    EtaFunction,
    add,
    apply_series,
    conjugate,
    from_amplitudes,
    hodge_dual,
    inner_product,
    multiply,
    norm_sq,
    normalize,
    scale,
    to_amplitudes,
    unit,
    variable,
    variables_sum,
)
from .invariants import (
    AmplitudeTensor4,
    InvariantReport,
    cayley_H,
    concurrence2,
    f2p_abs,
    f3_abs,
    flatten,
    flatten_rank,
    invariant_report,
    lmn,
    normalized_invariant,
    schlafli,
    sextic_D,
    three_tangle,
)
from .scalars import QQi, TOLERANCE, BackendError, ExactNormalizationError
from .states import (
    FamilyParams,
    NamedState,
    REGISTRY,
    cw,
    g_abcd,
    ghz,
    lookup,
    psi_a,
    psi_ad,
    psi_c,
    psi_c_alpha,
    psi_cs,
    psi_d,
    psi_s,
    psi_s_alpha,
    star_w,
    w,
)

__version__ = "0.1.0"
