"""Nerves, nested-set subdivisions and action-dimension bounds for Artin groups."""

import json

from ._core import (
    CoxeterMatrix,
    InputError,
    LemmaViolation,
    _homology,
    _nerve,
    _octahedralize,
    _report,
    _roots,
    _subdivide,
    example_names,
    finite_type,
    is_spherical,
    spherical_actdim,
    verify,
)

__all__ = [
    "CoxeterMatrix",
    "InputError",
    "LemmaViolation",
    "example",
    "example_names",
    "finite_type",
    "homology",
    "is_spherical",
    "nerve",
    "octahedralize",
    "report",
    "roots",
    "spherical_actdim",
    "subdivide",
    "verify",
]


def example(name):
    return CoxeterMatrix.example(name)


def _matrix(m):
    if isinstance(m, CoxeterMatrix):
        return m
    if isinstance(m, dict):
        return CoxeterMatrix.from_json(json.dumps(m))
    return CoxeterMatrix.from_json(m)


def nerve(m):
    return json.loads(_nerve(_matrix(m)))


def subdivide(m):
    return json.loads(_subdivide(_matrix(m)))


def octahedralize(m, complex="subdivision"):
    return json.loads(_octahedralize(_matrix(m), complex))


def homology(m):
    return json.loads(_homology(_matrix(m)))


def roots(m, subset=None):
    return json.loads(_roots(_matrix(m), subset))


def report(m, assume_kpi1=False):
    return json.loads(_report(_matrix(m), assume_kpi1))
