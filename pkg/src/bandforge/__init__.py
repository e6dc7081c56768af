"""
bandforge: braid-group calculus in the band-generator (dual Garside) setting.

Words over band generators, canonical factors as non-crossing partitions,
the left canonical form with its inf/sup invariants, super summit set
conjugacy machinery, quasipositivity detection with negative-band bounds,
and exact rational intervals around the fractional Dehn twist coefficient.
"""

from .conjugacy import (
    BudgetExceededError,
    ConjugacyResult,
    SummitData,
    are_conjugate,
    cycling,
    decycling,
    sss_enumerate,
    sss_representative,
)
from .factors import (
    CanonicalFactor,
    DiskLayout,
    complement,
    delta_factor,
    diamond,
    enumerate_factors,
    factor,
    factor_to_word,
    gen_factor,
    identity_factor,
    merge,
    parse_partition_text,
    precedes,
    right_set,
    split_left,
    star,
    starting_set,
    tau,
)
from .fdtc import FdtcInterval, fdtc_bounds, fdtc_exact_if_pinched
from .normal_form import (
    LeftCanonicalForm,
    inf_sup_len,
    lcf,
    lcf_to_word,
    left_weight_pair,
)
from .positivity import (
    NbReport,
    ReducedWord,
    StrictAsqpVerdict,
    asqp_necessary,
    count_negative_bands,
    is_conj_sqp,
    is_conj_strictly_asqp,
    is_sqp,
    nb_conjugacy_report,
    nb_report,
    reduce,
    reduce_once,
)
from .render import render_svg
from .words import (
    BandLetter,
    BraidWord,
    ParseError,
    artin_to_band,
    delta_word,
    parse_word,
    permutation,
    writhe,
)

__all__ = [
    "BandLetter",
    "BraidWord",
    "BudgetExceededError",
    "CanonicalFactor",
    "ConjugacyResult",
    "DiskLayout",
    "FdtcInterval",
    "LeftCanonicalForm",
    "NbReport",
    "ParseError",
    "ReducedWord",
    "StrictAsqpVerdict",
    "SummitData",
    "are_conjugate",
    "artin_to_band",
    "asqp_necessary",
    "complement",
    "count_negative_bands",
    "cycling",
    "decycling",
    "delta_factor",
    "delta_word",
    "diamond",
    "enumerate_factors",
    "factor",
    "factor_to_word",
    "fdtc_bounds",
    "fdtc_exact_if_pinched",
    "gen_factor",
    "identity_factor",
    "inf_sup_len",
    "is_conj_sqp",
    "is_conj_strictly_asqp",
    "is_sqp",
    "lcf",
    "lcf_to_word",
    "left_weight_pair",
    "merge",
    "nb_conjugacy_report",
    "nb_report",
    "parse_partition_text",
    "parse_word",
    "permutation",
    "precedes",
    "reduce",
    "reduce_once",
    "render_svg",
    "right_set",
    "split_left",
    "sss_enumerate",
    "sss_representative",
    "star",
    "starting_set",
    "tau",
    "writhe",
]
