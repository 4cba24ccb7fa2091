"""Exact affine Weyl group combinatorics and mod-p matrix calculus for GL_n.

The public surface is organised by layer: `affine_weyl` (elements, orders,
admissible sets), `weights` (lowest alcove presentations and genericity),
`inertial_types` (tame type presentations and descent data), `weight_sets`
(predicted sets, covering, defect, the cycle solver), `modp_flag` (charts,
Schubert cells, the monodromy condition, component fixed points), `bk_gauge`
(truncated series calculus and shapes), `oracles` (naive reference
implementations), and `cli` (the JSON command line).
"""

from .affine_weyl import (
    GroupContext,
    WeylElement,
    WeylTuple,
    adm,
    ap_enumerate,
    bruhat_interval,
    bruhat_leq,
    classify,
    evaluate,
    length,
    multiply,
    regular_factorization,
    star,
    up_leq,
)
from .errors import AwbmError
from .inertial_types import TameTypePresentation, a_tau, descent_data, make_type
from .weight_sets import (
    CycleExpr,
    bm_cycles,
    covers,
    defect,
    intersection,
    jh_set,
    max_defect_weight,
    w_question,
)
from .weights import (
    CentralCharacter,
    SerreWeightPresentation,
    build_Pm,
    central_character,
    genericity,
    lap_of,
    serre_weight,
    superscript,
)

__version__ = "0.1.0"

__all__ = [
    "AwbmError",
    "CentralCharacter",
    "CycleExpr",
    "GroupContext",
    "SerreWeightPresentation",
    "TameTypePresentation",
    "WeylElement",
    "WeylTuple",
    "a_tau",
    "adm",
    "ap_enumerate",
    "bm_cycles",
    "bruhat_interval",
    "bruhat_leq",
    "build_Pm",
    "central_character",
    "classify",
    "covers",
    "defect",
    "descent_data",
    "evaluate",
    "genericity",
    "intersection",
    "jh_set",
    "lap_of",
    "length",
    "make_type",
    "max_defect_weight",
    "multiply",
    "regular_factorization",
    "serre_weight",
    "star",
    "superscript",
    "up_leq",
    "w_question",
]
