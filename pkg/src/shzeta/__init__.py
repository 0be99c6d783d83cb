"""Tableau-parametrized multiple zeta series with Hurwitz-type shifts:
certified evaluation, identity checks, and the supporting
tableau/lattice-path combinatorics."""

from .errors import DomainError, UsageError
from .ezzeta import (
    Approx,
    EvalConfig,
    ez_zeta,
    ez_zeta_star,
    ez_zeta_star_star,
    hurwitz,
)
from .identities import IdentityReport
from .schurzeta import SchurInstance, instance_from_spec, schur_eval
from .shapes import Partition, SkewShape, hook, parse_partition, parse_shape
from .tableaux import ContentSpec, Tableau

__all__ = [
    "Approx",
    "ContentSpec",
    "DomainError",
    "EvalConfig",
    "IdentityReport",
    "Partition",
    "SchurInstance",
    "SkewShape",
    "Tableau",
    "UsageError",
    "ez_zeta",
    "ez_zeta_star",
    "ez_zeta_star_star",
    "hook",
    "hurwitz",
    "instance_from_spec",
    "parse_partition",
    "parse_shape",
    "schur_eval",
]

__version__ = "0.1.0"
