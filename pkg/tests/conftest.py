"""Shared builders for the test suite."""
from __future__ import annotations

import numpy as np

from borg_spectra import OperatorKind, OperatorSpec


def schrodinger(v) -> OperatorSpec:
    return OperatorSpec(kind=OperatorKind.SCHRODINGER, period=len(v), v=tuple(v))


def jacobi(v, a) -> OperatorSpec:
    return OperatorSpec(kind=OperatorKind.JACOBI, period=len(v), v=tuple(v), a=tuple(a))


def laurent(v, fourier) -> OperatorSpec:
    return OperatorSpec(
        kind=OperatorKind.LAURENT_GENERAL,
        period=len(v),
        v=tuple(v),
        fourier=tuple((int(k), float(c)) for k, c in fourier),
    )


def random_spec(rng: np.random.Generator, p_max: int = 8) -> OperatorSpec:
    p = int(rng.integers(2, p_max + 1))
    v = tuple(rng.uniform(-1.0, 1.0, size=p))
    if int(rng.integers(0, 2)) == 1:
        return jacobi(v, rng.uniform(0.5, 2.0, size=p))
    return schrodinger(v)
