"""Finite computational algebra: rings by structure constants, inverse
semigroups and groupoids, graded systems, partial actions, skew rings and
discrete convolution algebras, all verified by exhaustive enumeration."""

from . import catalog, finring, harness, invsgrp, paction, skewconstruct, steinberg, syscheck
from .finring import (
    FinAbGroup,
    FinRing,
    Ideal,
    Subgroup,
    center,
    centralizer,
    ideal_closure,
    is_simple,
    quotient_ring,
    ring_from_spec,
    subgroup_closure,
    unitality_predicates,
)
from .invsgrp import (
    FinGroupoid,
    InverseSemigroup,
    bisection_semigroup,
    induced_semigroup,
    matrix_groupoid,
    validate_groupoid,
    validate_inverse_semigroup,
)
from .paction import PartialAction, validate_partial_action
from .skewconstruct import build_L_pi, build_skew_ring
from .steinberg import ga_partial_action, steinberg_ring, translation
from .syscheck import SystemRing, validate_system

__version__ = "0.1.0"
