"""Periodic operator descriptions and their matrix-valued symbols.

Three families of self-adjoint bi-infinite operators are supported, all
with period-p structure and all sharing one p x p Hermitian symbol shape:
a real tridiagonal interior plus a complex corner pair at (1,p) / (p,1).

* discrete Schrodinger: diagonal v_1..v_p, off-diagonals 1, corner e^{i theta};
* Jacobi: diagonal v_1..v_p, off-diagonals a_1..a_{p-1} > 0, corner a_p e^{i theta};
* general block Laurent: diagonal v_1..v_p (ascending), off-diagonals 1,
  corner g(theta) = sum_k a_k e^{ik theta} over a finite coefficient list.

For p <= 2 the corner lands on entries already occupied by the tridiagonal
part; colliding contributions are summed, which is exactly what the
bi-infinite matrix representation produces (p = 1 gives the scalar symbol
v_1 + 2 cos theta for the Schrodinger family).

Shifted symbols f_k rotate the coefficient sequences by k; all of them
have the same eigenvalues at fixed theta, and downstream code is free to
pick whichever shift is convenient.  theta lives on (-pi, pi] and inputs
are wrapped onto that interval.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import InvalidParameterError, InvalidSpecError

TWO_PI = 2.0 * math.pi


class OperatorKind(Enum):
    SCHRODINGER = "schrodinger"
    JACOBI = "jacobi"
    LAURENT_GENERAL = "laurent"


def wrap_theta(theta: float) -> float:
    """Map any real angle onto the fundamental domain (-pi, pi]."""
    if not math.isfinite(theta):
        raise InvalidParameterError(f"theta must be finite, got {theta!r}")
    w = math.remainder(theta, TWO_PI)
    if w <= -math.pi:  # remainder may return the left endpoint
        w += TWO_PI
    return w


@dataclass(frozen=True)
class OperatorSpec:
    """Immutable description of one periodic operator.

    Fields `a` (Jacobi off-diagonals) and `fourier` (Laurent corner
    coefficients, as (k, a_k) pairs) are only meaningful for their kinds;
    a Jacobi spec without `a` defaults to all ones.
    """

    kind: OperatorKind
    period: int
    v: tuple[float, ...]
    a: tuple[float, ...] | None = None
    fourier: tuple[tuple[int, float], ...] | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.period, int) or isinstance(self.period, bool):
            raise InvalidSpecError(f"period must be an integer, got {self.period!r}")
        if self.period < 1:
            raise InvalidSpecError(f"period must be >= 1, got {self.period}")
        object.__setattr__(self, "v", tuple(float(x) for x in self.v))
        if len(self.v) != self.period:
            raise InvalidSpecError(
                f"period {self.period} does not match len(v) = {len(self.v)}"
            )
        if not all(math.isfinite(x) for x in self.v):
            raise InvalidSpecError("potential entries must be finite")

        if self.kind is OperatorKind.SCHRODINGER:
            if self.a is not None:
                a = tuple(float(x) for x in self.a)
                if any(x != 1.0 for x in a):
                    raise InvalidSpecError(
                        "Schrodinger specs have implicit off-diagonals 1; "
                        "use kind=jacobi for general weights"
                    )
                object.__setattr__(self, "a", a)
            if self.fourier is not None:
                raise InvalidSpecError("fourier coefficients only apply to laurent specs")
        elif self.kind is OperatorKind.JACOBI:
            a = self.a if self.a is not None else (1.0,) * self.period
            a = tuple(float(x) for x in a)
            if len(a) != self.period:
                raise InvalidSpecError(
                    f"period {self.period} does not match len(a) = {len(a)}"
                )
            if not all(math.isfinite(x) and x > 0.0 for x in a):
                raise InvalidSpecError("Jacobi off-diagonals a_j must be positive")
            object.__setattr__(self, "a", a)
            if self.fourier is not None:
                raise InvalidSpecError("fourier coefficients only apply to laurent specs")
        elif self.kind is OperatorKind.LAURENT_GENERAL:
            if self.a is not None:
                raise InvalidSpecError("laurent specs carry fourier pairs, not `a`")
            if self.fourier is None:
                raise InvalidSpecError("laurent specs need a fourier coefficient list")
            pairs = []
            for item in self.fourier:
                k, coeff = item
                if not isinstance(k, int) or isinstance(k, bool):
                    raise InvalidSpecError(f"fourier index must be an integer, got {k!r}")
                coeff = float(coeff)
                if not math.isfinite(coeff):
                    raise InvalidSpecError("fourier coefficients must be finite")
                pairs.append((k, coeff))
            object.__setattr__(self, "fourier", tuple(pairs))
            # ascending potential is a standing hypothesis for this family
            if any(self.v[i] > self.v[i + 1] for i in range(self.period - 1)):
                raise InvalidSpecError(
                    "laurent specs require the potential sorted ascending"
                )
        else:  # pragma: no cover - enum is closed
            raise InvalidSpecError(f"unknown kind {self.kind!r}")

    # -- derived quantities -------------------------------------------------

    def offdiagonals(self) -> np.ndarray:
        """Interior off-diagonal weights a_1..a_p (ones unless Jacobi)."""
        if self.kind is OperatorKind.JACOBI:
            return np.asarray(self.a, dtype=float)
        return np.ones(self.period)

    def fourier_l1(self) -> float:
        """sum_k |a_k| of the corner series (0 for empty lists)."""
        if self.kind is not OperatorKind.LAURENT_GENERAL:
            raise InvalidSpecError("fourier_l1 only applies to laurent specs")
        return float(sum(abs(c) for _, c in self.fourier))

    # -- (de)serialization ---------------------------------------------------

    @classmethod
    def from_dict(cls, data: dict) -> "OperatorSpec":
        if not isinstance(data, dict):
            raise InvalidSpecError(f"operator spec must be an object, got {type(data)}")
        try:
            kind = OperatorKind(data["kind"])
        except KeyError:
            raise InvalidSpecError("operator spec needs a 'kind' field") from None
        except ValueError:
            raise InvalidSpecError(f"unknown operator kind {data.get('kind')!r}") from None
        if "period" not in data or "v" not in data:
            raise InvalidSpecError("operator spec needs 'period' and 'v' fields")
        period = data["period"]
        if not isinstance(period, int) or isinstance(period, bool):
            raise InvalidSpecError(f"period must be an integer, got {period!r}")
        v = tuple(data["v"])
        a = tuple(data["a"]) if "a" in data and data["a"] is not None else None
        fourier = None
        if kind is OperatorKind.LAURENT_GENERAL:
            raw = data.get("fourier")
            if raw is None:
                raise InvalidSpecError("laurent specs need a 'fourier' field")
            fourier = tuple((int(k), float(c)) for k, c in raw)
        return cls(kind=kind, period=period, v=v, a=a, fourier=fourier)

    @classmethod
    def from_json(cls, text: str) -> "OperatorSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidSpecError(f"operator spec is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind.value, "period": self.period, "v": list(self.v)}
        if self.kind is OperatorKind.JACOBI:
            out["a"] = list(self.a)
        if self.kind is OperatorKind.LAURENT_GENERAL:
            out["fourier"] = [[k, c] for k, c in self.fourier]
        return out


@dataclass(frozen=True)
class SymbolMatrix:
    """One evaluation f_k(theta): a p x p Hermitian complex matrix."""

    dim: int
    theta: float
    entries: np.ndarray


@dataclass(frozen=True)
class JacobiSubmatrix:
    """Leading (p-1) x (p-1) principal block of f_k; theta-independent."""

    dim: int
    shift: int
    entries: np.ndarray


def _check_shift(spec: OperatorSpec, shift: int) -> int:
    if not isinstance(shift, int) or isinstance(shift, bool):
        raise InvalidParameterError(f"shift must be an integer, got {shift!r}")
    if not 0 <= shift < spec.period:
        raise InvalidParameterError(
            f"shift {shift} outside [0, {spec.period - 1}] for period {spec.period}"
        )
    return shift


def _corner_series(spec: OperatorSpec, thetas: np.ndarray) -> np.ndarray:
    """g(theta) = sum_k a_k e^{ik theta}, vectorized over the grid."""
    out = np.zeros(len(thetas), dtype=complex)
    for k, coeff in spec.fourier:
        out += coeff * np.exp(1j * k * thetas)
    return out


def symbol_stack(spec: OperatorSpec, shift: int, thetas: Sequence[float]) -> np.ndarray:
    """Hermitian symbol matrices for a whole theta grid, shape (N, p, p).

    Hermiticity is exact by construction: the strict upper triangle is
    assembled first (summing any colliding corner contributions) and the
    lower triangle is its conjugate; the real diagonal is added last.
    """
    _check_shift(spec, shift)
    if spec.kind is OperatorKind.LAURENT_GENERAL and shift != 0:
        raise InvalidParameterError(
            "laurent specs admit no shifted symbols; use shift=0"
        )
    p = spec.period
    th = np.asarray([wrap_theta(t) for t in thetas], dtype=float)
    n = len(th)

    diag = np.asarray(spec.v, dtype=float)[(shift + np.arange(p)) % p]
    if spec.kind is OperatorKind.LAURENT_GENERAL:
        off = np.ones(p - 1)
        corner = _corner_series(spec, th)
    else:
        weights = spec.offdiagonals()
        off = weights[(shift + np.arange(p - 1)) % p]
        corner = weights[(shift + p - 1) % p] * np.exp(1j * th)

    m = np.zeros((n, p, p), dtype=complex)
    if p >= 2:
        idx = np.arange(p - 1)
        m[:, idx, idx + 1] = off
        m[:, 0, p - 1] += corner
        m = m + np.conjugate(np.swapaxes(m, 1, 2))
    else:
        m[:, 0, 0] = corner + np.conjugate(corner)
    m[:, np.arange(p), np.arange(p)] += diag
    return m


def _single_symbol(spec: OperatorSpec, shift: int, theta: float) -> SymbolMatrix:
    w = wrap_theta(theta)
    entries = symbol_stack(spec, shift, [w])[0]
    return SymbolMatrix(dim=spec.period, theta=w, entries=entries)


def schrodinger_symbol(spec: OperatorSpec, shift: int, theta: float) -> SymbolMatrix:
    """Symbol f_k(theta) of a discrete Schrodinger operator."""
    if spec.kind is not OperatorKind.SCHRODINGER:
        raise InvalidSpecError(f"expected a schrodinger spec, got {spec.kind.value}")
    return _single_symbol(spec, shift, theta)


def jacobi_symbol(spec: OperatorSpec, shift: int, theta: float) -> SymbolMatrix:
    """Symbol f_k(theta) of a periodic Jacobi operator.

    Reduces entrywise to the Schrodinger symbol when all a_j = 1.
    """
    if spec.kind is not OperatorKind.JACOBI:
        raise InvalidSpecError(f"expected a jacobi spec, got {spec.kind.value}")
    return _single_symbol(spec, shift, theta)


def laurent_symbol(spec: OperatorSpec, theta: float) -> SymbolMatrix:
    """Symbol of a general block Laurent operator (no shifts exist here)."""
    if spec.kind is not OperatorKind.LAURENT_GENERAL:
        raise InvalidSpecError(f"expected a laurent spec, got {spec.kind.value}")
    return _single_symbol(spec, 0, theta)


def symbol(spec: OperatorSpec, shift: int, theta: float) -> SymbolMatrix:
    """Kind-dispatching symbol constructor."""
    if spec.kind is OperatorKind.SCHRODINGER:
        return schrodinger_symbol(spec, shift, theta)
    if spec.kind is OperatorKind.JACOBI:
        return jacobi_symbol(spec, shift, theta)
    if shift != 0:
        raise InvalidParameterError("laurent specs admit no shifted symbols")
    return laurent_symbol(spec, theta)


def interlacing_submatrix(spec: OperatorSpec, shift: int = 0) -> JacobiSubmatrix:
    """Leading (p-1) x (p-1) principal block J_k of the symbol.

    The corner entries of f_k live at (1,p) and (p,1), so J_k does not
    depend on theta: it is the real tridiagonal matrix with diagonal
    v_{k+1}..v_{k+p-1} and off-diagonals a_{k+1}..a_{k+p-2}.
    """
    _check_shift(spec, shift)
    p = spec.period
    if p < 2:
        raise InvalidSpecError("interlacing submatrix needs period >= 2")
    if spec.kind is OperatorKind.LAURENT_GENERAL and shift != 0:
        raise InvalidParameterError("laurent specs admit no shifted symbols")
    q = p - 1
    diag = np.asarray(spec.v, dtype=float)[(shift + np.arange(q)) % p]
    off = spec.offdiagonals()[(shift + np.arange(q - 1)) % p]
    m = np.zeros((q, q))
    idx = np.arange(q - 1)
    m[idx, idx + 1] = off
    m[idx + 1, idx] = off
    m[np.arange(q), np.arange(q)] = diag
    return JacobiSubmatrix(dim=q, shift=shift, entries=m)


def lipschitz_bound(spec: OperatorSpec) -> float:
    """Upper bound on |d lambda_j / d theta| for every band function.

    Only the corner entries move with theta, so a Weyl bound gives
    2 a_p for the tridiagonal families (the factor 2 also covers the
    p = 1 collision case) and 2 sum_k |k a_k| for the Laurent corner.
    """
    if spec.kind is OperatorKind.LAURENT_GENERAL:
        return 2.0 * float(sum(abs(k) * abs(c) for k, c in spec.fourier))
    return 2.0 * float(spec.offdiagonals()[-1])
