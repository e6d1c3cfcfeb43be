"""Exact verification of truncated reflection algebras (Python front end)."""

from fractions import Fraction

from ._reflalg import (
    AlgebraError,
    CPoly,
    EulerTable,
    NCPoly,
    TowerLevel,
    anticommutator,
    build_tower,
    casimir,
    check_center_n1,
    check_center_n2,
    check_functional_relation,
    check_higgs_n1,
    check_n2,
    check_prE,
    commutator,
    embed,
    hahn_check,
    rll_residual_terms,
    serre_check,
    yang_baxter_residual_terms,
)

x = CPoly.var("x")
mu0 = CPoly.var("mu0")


def bernoulli(n, table=None):
    """B_n as a Fraction."""
    table = table or EulerTable.build(n)
    return Fraction(table.bernoulli(n))


__all__ = [
    "AlgebraError",
    "CPoly",
    "EulerTable",
    "NCPoly",
    "TowerLevel",
    "anticommutator",
    "bernoulli",
    "build_tower",
    "casimir",
    "check_center_n1",
    "check_center_n2",
    "check_functional_relation",
    "check_higgs_n1",
    "check_n2",
    "check_prE",
    "commutator",
    "embed",
    "hahn_check",
    "mu0",
    "rll_residual_terms",
    "serre_check",
    "x",
    "yang_baxter_residual_terms",
]
