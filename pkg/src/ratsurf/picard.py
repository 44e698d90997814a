"""Exact integer arithmetic in the Picard lattice of a blown-up rational surface.

Two model families are supported:

* the projective plane blown up at ``n`` points, with basis
  ``(L, E_1, ..., E_n)``, intersection form ``L^2 = 1``, ``E_i^2 = -1``,
  mixed products zero, and canonical class ``K = -3L + sum(E_i)``;
* a Hirzebruch surface ``F_e`` blown up at ``n`` points, with basis
  ``(B, F, E_1, ..., E_n)`` where ``B`` is a section with ``B^2 = e`` and
  ``F`` a fibre (``B.F = 1``, ``F^2 = 0``), and canonical class
  ``K = -2B + (e-2)F + sum(E_i)``.

Everything here is a pure, exact evaluation of the bilinear form; no
geometric question (effectivity, very-ampleness, ...) is decided.
Coefficients are Python integers, so there is no overflow to detect.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

PLANE = "plane"
HIRZEBRUCH = "hirzebruch"


class ModelMismatchError(ValueError):
    """Two divisor classes live on different surface models."""


@dataclass(frozen=True)
class SurfaceModel:
    """A blown-up rational surface, identified by its Picard basis data.

    ``kind`` is :data:`PLANE` or :data:`HIRZEBRUCH`; ``n`` counts the
    exceptional classes; ``e`` is the Hirzebruch parameter (``None`` for
    plane models).
    """

    kind: str
    n: int
    e: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (PLANE, HIRZEBRUCH):
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("number of blown-up points must be non-negative")
        if self.kind == HIRZEBRUCH:
            if self.e is None or self.e < 0:
                raise ValueError("Hirzebruch parameter e must be a non-negative integer")
        elif self.e is not None:
            raise ValueError("plane models carry no Hirzebruch parameter")

    @property
    def rank(self) -> int:
        return (1 if self.kind == PLANE else 2) + self.n

    @property
    def head_size(self) -> int:
        """Number of non-exceptional basis elements (1 for plane, 2 for F_e)."""
        return 1 if self.kind == PLANE else 2

    @property
    def k_squared(self) -> int:
        return (9 if self.kind == PLANE else 8) - self.n

    # -- basis classes -------------------------------------------------

    def basis(self, i: int) -> "DivisorClass":
        coeffs = [0] * self.rank
        coeffs[i] = 1
        return DivisorClass(self, tuple(coeffs))

    def line(self) -> "DivisorClass":
        if self.kind != PLANE:
            raise ValueError("line class only exists on plane models")
        return self.basis(0)

    def section(self) -> "DivisorClass":
        if self.kind != HIRZEBRUCH:
            raise ValueError("section class only exists on Hirzebruch models")
        return self.basis(0)

    def fiber(self) -> "DivisorClass":
        if self.kind != HIRZEBRUCH:
            raise ValueError("fibre class only exists on Hirzebruch models")
        return self.basis(1)

    def exceptional(self, i: int) -> "DivisorClass":
        """The i-th exceptional class, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"exceptional index {i} out of range 1..{self.n}")
        return self.basis(self.head_size + i - 1)

    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (0,) * self.rank)

    def divisor(self, *head: int, mults: Iterable[int] = ()) -> "DivisorClass":
        """Build ``d*L - sum(m_i E_i)`` resp. ``p*B + q*F - sum(m_i E_i)``.

        ``mults`` lists the multiplicities m_i in basis order; missing
        trailing entries default to 0.
        """
        if len(head) != self.head_size:
            raise ValueError(f"expected {self.head_size} head coefficient(s)")
        ms = list(mults)
        if len(ms) > self.n:
            raise ValueError("more multiplicities than exceptional classes")
        ms += [0] * (self.n - len(ms))
        return DivisorClass(self, tuple(head) + tuple(-m for m in ms))

    def __str__(self) -> str:
        if self.kind == PLANE:
            return f"P2({self.n})"
        return f"F{self.e}({self.n})"


def plane_blowup(n: int) -> SurfaceModel:
    return SurfaceModel(PLANE, n)


def hirzebruch_blowup(e: int, n: int) -> SurfaceModel:
    return SurfaceModel(HIRZEBRUCH, n, e)


@dataclass(frozen=True)
class DivisorClass:
    """An integer divisor class, stored as raw coefficients over the basis.

    For plane models the coefficients are ``(d, -m_1, ..., -m_n)``; for
    Hirzebruch models ``(p, q, -m_1, ..., -m_n)``.  Values are immutable.
    """

    model: SurfaceModel
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.model.rank:
            raise ValueError(
                f"coefficient vector has length {len(self.coeffs)}, "
                f"model rank is {self.model.rank}"
            )

    # -- linear structure ----------------------------------------------

    def _check(self, other: "DivisorClass") -> None:
        if self.model != other.model:
            raise ModelMismatchError(f"classes on {self.model} and {other.model}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.model, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.model, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.model, tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(self.model, tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def head(self) -> tuple[int, ...]:
        return self.coeffs[: self.model.head_size]

    @property
    def exc_coeffs(self) -> tuple[int, ...]:
        """Raw exceptional coefficients (a multiplicity m appears as -m)."""
        return self.coeffs[self.model.head_size :]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(-c for c in self.exc_coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        return signed_str(self)


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Evaluate the intersection form.  Symmetric and bilinear."""
    if d1.model != d2.model:
        raise ModelMismatchError(f"classes on {d1.model} and {d2.model}")
    m = d1.model
    a, b = d1.coeffs, d2.coeffs
    if m.kind == PLANE:
        head = a[0] * b[0]
        k = 1
    else:
        head = m.e * a[0] * b[0] + a[0] * b[1] + a[1] * b[0]
        k = 2
    return head - sum(a[i] * b[i] for i in range(k, m.rank))


def canonical(model: SurfaceModel) -> DivisorClass:
    """The canonical class of the model."""
    if model.kind == PLANE:
        return DivisorClass(model, (-3,) + (1,) * model.n)
    return DivisorClass(model, (-2, model.e - 2) + (1,) * model.n)


def degree(h: DivisorClass) -> int:
    """Self-intersection H.H (the degree of the embedded surface)."""
    return intersect(h, h)


def _genus_numerator(d: DivisorClass) -> int:
    s = intersect(d, d) + intersect(d, canonical(d.model))
    if s % 2 != 0:
        # cannot happen for integer classes; guards coefficient corruption
        raise ArithmeticError(f"parity violation: D^2 + D.K = {s} is odd")
    return s


def arithmetic_genus(d: DivisorClass) -> int:
    """p_a(D) = (D^2 + D.K)/2 + 1."""
    return _genus_numerator(d) // 2 + 1


def sectional_genus(h: DivisorClass) -> int:
    """Genus of a hyperplane section; same formula as the arithmetic genus."""
    return arithmetic_genus(h)


def euler_char(d: DivisorClass) -> int:
    """chi(O_S(D)) = 1 + (D^2 - D.K)/2 by Riemann-Roch on a rational surface."""
    return 1 + (intersect(d, d) - intersect(d, canonical(d.model))) // 2


def invariants(h: DivisorClass) -> tuple[int, int, int]:
    """(degree, sectional genus, K^2) of the polarized model."""
    return degree(h), sectional_genus(h), h.model.k_squared


def signed_str(d: DivisorClass) -> str:
    """Raw signed rendering, e.g. ``<-1; +1@1, +1@9>``.

    Unlike bracket type notation this prints any integer class, listing the
    nonzero exceptional coefficients with explicit signs and positions.
    """
    head = ",".join(str(c) for c in d.head)
    parts = [
        f"{c:+d}@{i}" for i, c in enumerate(d.exc_coeffs, start=1) if c != 0
    ]
    if parts:
        return f"<{head}; " + ", ".join(parts) + ">"
    return f"<{head}>"
