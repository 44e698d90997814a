"""Bracket "type" notation for divisor classes, and its parser/printer.

Plane types look like ``[7;2^7,1^10]`` meaning ``7L - 2E_1 - ... - 2E_7 -
E_8 - ... - E_17``; ruled types look like ``[(4,4-2e);2^1,1^17]`` meaning
``4B + (4-2e)F - 2E_1 - E_2 - ... - E_18`` on a Hirzebruch surface ``F_e``.
The head of a ruled type may carry a subscript annotation, ``(4,4-2e)_2``;
the annotation is preserved verbatim and never interpreted.

The symbolic ``e`` is kept symbolic (an affine expression ``a + b*e``) and
resolved only when a type is realized as a concrete divisor class.  Slopes
may be half-integral (``4-3/2e`` occurs in the reference tables); realizing
such a type at an odd ``e`` is a conversion error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .picard import (
    DivisorClass,
    SurfaceModel,
    hirzebruch_blowup,
    plane_blowup,
)


class TypeSyntaxError(ValueError):
    """Bad type string; carries the offending position."""

    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ConversionError(ValueError):
    """A class cannot be moved between type notation and raw coefficients."""


@dataclass(frozen=True)
class Affine:
    """An expression ``const + slope*e`` with exact rational parts."""

    const: Fraction
    slope: Fraction = Fraction(0)

    @staticmethod
    def of(const: int | Fraction, slope: int | Fraction = 0) -> "Affine":
        return Affine(Fraction(const), Fraction(slope))

    @property
    def is_constant(self) -> bool:
        return self.slope == 0

    def __add__(self, other: "Affine") -> "Affine":
        return Affine(self.const + other.const, self.slope + other.slope)

    def at(self, e: int) -> int:
        value = self.const + self.slope * e
        if value.denominator != 1:
            raise ConversionError(
                f"coefficient {self} is not an integer at e={e}"
            )
        return int(value)

    def __str__(self) -> str:
        def frac(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        if self.slope == 0:
            return frac(self.const)
        mag = abs(self.slope)
        coeff = "" if mag == 1 else frac(mag)
        term = f"{coeff}e"
        if self.const == 0:
            return term if self.slope > 0 else f"-{term}"
        sign = "-" if self.slope < 0 else "+"
        return f"{frac(self.const)}{sign}{term}"


@dataclass(frozen=True)
class PlaneHead:
    d: int


@dataclass(frozen=True)
class RuledHead:
    p: Affine
    q: Affine
    annotation: int | None = None


@dataclass(frozen=True)
class TypeExpr:
    """A canonicalized bracket type.

    ``mults`` lists ``(multiplicity, count)`` groups, multiplicities
    strictly decreasing, counts >= 1.  ``e_binding`` optionally pins the
    Hirzebruch parameter of a ruled type with constant head coefficients.
    """

    head: PlaneHead | RuledHead
    mults: tuple[tuple[int, int], ...] = ()
    e_binding: int | None = None

    def __post_init__(self) -> None:
        last = None
        for m, c in self.mults:
            if m <= 0:
                raise ValueError(f"multiplicity {m} must be positive")
            if c <= 0:
                raise ValueError(f"count {c} must be positive")
            if last is not None and m >= last:
                raise ValueError("multiplicity groups must strictly decrease")
            last = m

    @property
    def is_plane(self) -> bool:
        return isinstance(self.head, PlaneHead)

    @property
    def total_points(self) -> int:
        return sum(c for _, c in self.mults)

    @property
    def is_symbolic(self) -> bool:
        h = self.head
        return isinstance(h, RuledHead) and not (h.p.is_constant and h.q.is_constant)

    def flat_mults(self) -> list[int]:
        out: list[int] = []
        for m, c in self.mults:
            out.extend([m] * c)
        return out


def _canonical_groups(pairs: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    tally: dict[int, int] = {}
    for m, c in pairs:
        tally[m] = tally.get(m, 0) + c
    return tuple(sorted(tally.items(), key=lambda mc: -mc[0]))


def make_type(
    head: PlaneHead | RuledHead,
    mults: list[tuple[int, int]],
    e_binding: int | None = None,
) -> TypeExpr:
    return TypeExpr(head, _canonical_groups(mults), e_binding)


# -- parsing -----------------------------------------------------------


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise TypeSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        m = re.match(r"[+-]?\d+", self.text[self.pos :])
        if not m:
            raise TypeSyntaxError("expected an integer", self.pos)
        self.pos += m.end()
        return int(m.group())

    def natural(self) -> int:
        self.skip_ws()
        m = re.match(r"\d+", self.text[self.pos :])
        if not m:
            raise TypeSyntaxError("expected a number", self.pos)
        self.pos += m.end()
        return int(m.group())


def _parse_affine(sc: _Scanner) -> Affine:
    # const? ((+|-) coeff? 'e')?  |  (+|-)? coeff? 'e'
    const = Fraction(0)
    sign = 1
    have_const = False
    sc.skip_ws()
    if sc.peek() == "e":
        sc.pos += 1
        return Affine(Fraction(0), Fraction(1))
    if sc.peek() == "-":
        start = sc.pos
        sc.pos += 1
        if sc.peek() == "e":
            sc.pos += 1
            return Affine(Fraction(0), Fraction(-1))
        sc.pos = start
    n = sc.integer()
    # "3/2e" style slope with no constant part
    if sc.accept("/"):
        den = sc.natural()
        sc.skip_ws()
        if sc.peek() != "e":
            raise TypeSyntaxError("fractional coefficient must multiply e", sc.pos)
        sc.pos += 1
        return Affine(Fraction(0), Fraction(n, den))
    sc.skip_ws()
    if sc.peek() == "e":
        sc.pos += 1
        return Affine(Fraction(0), Fraction(n))
    const = Fraction(n)
    have_const = True
    sc.skip_ws()
    if sc.peek() in "+-":
        start = sc.pos
        sign = 1 if sc.peek() == "+" else -1
        sc.pos += 1
        sc.skip_ws()
        if sc.peek() == "e":
            sc.pos += 1
            return Affine(const, Fraction(sign))
        m = re.match(r"\d+(/\d+)?\s*e", sc.text[sc.pos :])
        if m:
            num = re.match(r"\d+(/\d+)?", m.group()).group()
            slope = Fraction(num) * sign
            sc.pos += m.end()
            return Affine(const, slope)
        sc.pos = start  # the sign belongs to the next token (e.g. "(3,-1)")
    if not have_const:
        raise TypeSyntaxError("expected an affine expression", sc.pos)
    return Affine(const)


def parse(text: str) -> TypeExpr:
    """Parse a bracket type string into a canonicalized :class:`TypeExpr`.

    Whitespace is ignored; multiplicity groups given out of order are
    normalized; zero or negative multiplicities are rejected.
    """
    sc = _Scanner(text)
    sc.expect("[")
    head: PlaneHead | RuledHead
    if sc.peek() == "(":
        sc.expect("(")
        p = _parse_affine(sc)
        sc.expect(",")
        q = _parse_affine(sc)
        sc.expect(")")
        annotation = None
        if sc.accept("_"):
            annotation = sc.integer()
        head = RuledHead(p, q, annotation)
    else:
        head = PlaneHead(sc.integer())
    pairs: list[tuple[int, int]] = []
    if sc.accept(";"):
        while True:
            sc.skip_ws()
            at = sc.pos
            m = sc.integer()
            if m <= 0:
                raise TypeSyntaxError(f"multiplicity {m} must be positive", at)
            count = 1
            if sc.accept("^"):
                at = sc.pos
                count = sc.integer()
                if count <= 0:
                    raise TypeSyntaxError(f"count {count} must be positive", at)
            pairs.append((m, count))
            if not sc.accept(","):
                break
    sc.expect("]")
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise TypeSyntaxError("trailing input after type", sc.pos)
    return make_type(head, pairs)


def render(t: TypeExpr, annotation: bool = True) -> str:
    """Canonical string form; ``parse(render(t)) == t`` (up to annotation)."""
    if isinstance(t.head, PlaneHead):
        head = str(t.head.d)
    else:
        head = f"({t.head.p},{t.head.q})"
        if annotation and t.head.annotation is not None:
            head += f"_{t.head.annotation}"
    if not t.mults:
        return f"[{head}]"
    body = ",".join(f"{m}^{c}" for m, c in t.mults)
    return f"[{head};{body}]"


def canonical_key(t: TypeExpr) -> str:
    """Annotation-free rendering used to compare types across tables."""
    return render(t, annotation=False)


# -- realization -------------------------------------------------------


def to_divisor(t: TypeExpr, e: int | None = None) -> tuple[SurfaceModel, DivisorClass]:
    """Realize a type on a fresh model with ``n = total_points``.

    For ruled types the Hirzebruch parameter must be resolved, either by
    an explicit argument or by the type's own binding.
    """
    n = t.total_points
    if isinstance(t.head, PlaneHead):
        model = plane_blowup(n)
        coeffs = (t.head.d,) + tuple(-m for m in t.flat_mults())
        return model, DivisorClass(model, coeffs)
    if e is None:
        e = t.e_binding
    if e is None:
        if t.head.p.is_constant and t.head.q.is_constant:
            e = 0  # no symbolic part; conventionally F_0 unless bound
        else:
            raise ConversionError("ruled type needs a resolved Hirzebruch parameter e")
    if e < 0:
        raise ConversionError("Hirzebruch parameter e must be non-negative")
    model = hirzebruch_blowup(e, n)
    coeffs = (t.head.p.at(e), t.head.q.at(e)) + tuple(-m for m in t.flat_mults())
    return model, DivisorClass(model, coeffs)


def from_divisor(d: DivisorClass) -> TypeExpr:
    """Inverse of :func:`to_divisor` on canonical types.

    Positions with zero multiplicity are dropped and the remaining
    multiplicities sorted, so only the multiset survives.  A positive
    exceptional coefficient has no type form and raises
    :class:`ConversionError` naming the offender; use
    :func:`ratsurf.picard.signed_str` for such classes.
    """
    mults = []
    for i, c in enumerate(d.exc_coeffs, start=1):
        if c > 0:
            raise ConversionError(
                f"exceptional coefficient +{c} at position {i} has no type form"
            )
        if c < 0:
            mults.append((-c, 1))
    if d.model.kind == "plane":
        head: PlaneHead | RuledHead = PlaneHead(d.coeffs[0])
        binding = None
    else:
        head = RuledHead(Affine.of(d.coeffs[0]), Affine.of(d.coeffs[1]))
        binding = d.model.e
    return make_type(head, mults, e_binding=binding)
