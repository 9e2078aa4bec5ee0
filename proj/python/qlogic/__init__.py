"""Finite effect algebras, cloning bimorphisms, states and hidden-variable models."""

from ._core import (
    DEFAULT_SEED,
    EffectAlgebra,
    QlogicError,
    __version__,
    analyze,
    catalog,
    clone_search,
    divisible,
    from_dict,
    hidden_variable,
    is_boolean,
    is_isomorphic,
    loads,
    meet_witness,
    run_cli,
    verify_witness,
    vertex_states,
)


def load(path):
    with open(path, encoding="utf-8") as f:
        return loads(f.read())


__all__ = [
    "DEFAULT_SEED",
    "EffectAlgebra",
    "QlogicError",
    "analyze",
    "catalog",
    "clone_search",
    "divisible",
    "from_dict",
    "hidden_variable",
    "is_boolean",
    "is_isomorphic",
    "load",
    "loads",
    "meet_witness",
    "run_cli",
    "verify_witness",
    "vertex_states",
]
