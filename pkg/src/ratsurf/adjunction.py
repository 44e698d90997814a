"""Adjunction steps H -> H + K with blow-down bookkeeping, and their inverses.

The forward step adds the canonical class and removes every exceptional
basis class whose multiplicity in H is exactly 1 (numerically these are
the (-1)-curves E with H.E = 1 and K.E = -1, which the adjoint morphism
contracts).  Remaining multiplicities drop by 1; the plane degree drops
by 3, a Hirzebruch section coefficient by 2 and the fibre coefficient by
e - 2.  The blow-down criterion is purely lattice-level: (-1)-classes not
of basis form are out of scope here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .picard import (
    HIRZEBRUCH,
    PLANE,
    DivisorClass,
    SurfaceModel,
    canonical,
    degree,
    hirzebruch_blowup,
    intersect,
    plane_blowup,
    sectional_genus,
)

SEQUENCE_STEP_CAP = 32


class LeavesFamilyError(ValueError):
    """Adjunction left the model family (negative multiplicity or dominated head).

    Carries the raw adjoint class so the caller can inspect it.
    """

    def __init__(self, model: SurfaceModel, raw: DivisorClass, reason: str) -> None:
        super().__init__(f"adjunction leaves the model family: {reason}")
        self.model = model
        self.raw = raw


@dataclass(frozen=True)
class AdjunctionStep:
    before: tuple[SurfaceModel, DivisorClass]
    after: tuple[SurfaceModel, DivisorClass]
    blown_down: int
    removed_indices: tuple[int, ...]  # original 1-based positions of the removed E_i
    invariants_before: tuple[int, int, int]  # (degree, genus, K^2)
    invariants_after: tuple[int, int, int]


@dataclass(frozen=True)
class AdjunctionSequence:
    steps: tuple[AdjunctionStep, ...]
    terminal: tuple[SurfaceModel, DivisorClass]
    n0: int  # first surface index whose sectional genus is <= 5

    @property
    def history(self) -> list[tuple[int, int, int]]:
        if not self.steps:
            from .picard import invariants

            return [invariants(self.terminal[1])]
        return [self.steps[0].invariants_before] + [s.invariants_after for s in self.steps]


def adjoin(model: SurfaceModel, h: DivisorClass) -> AdjunctionStep:
    """One adjunction step.  ``h`` must be in type form (multiplicities >= 0)."""
    if h.model != model:
        raise ValueError("class does not live on the given model")
    mults = h.multiplicities
    if any(m < 0 for m in mults):
        raise ValueError("adjoin expects a type-form class with multiplicities >= 0")
    raw = h + canonical(model)
    new_mults = [m - 1 for m in mults]
    if any(m < -1 for m in new_mults):  # unreachable given the precondition
        raise AssertionError
    if any(m < 0 for m in new_mults):
        raise LeavesFamilyError(model, raw, "negative multiplicity")
    head = raw.head
    if head[0] < 1:
        raise LeavesFamilyError(model, raw, "head coefficient dropped below 1")
    removed = tuple(i for i, m in enumerate(new_mults, start=1) if m == 0)
    kept = [m for m in new_mults if m > 0]
    if model.kind == PLANE:
        new_model = plane_blowup(len(kept))
    else:
        new_model = hirzebruch_blowup(model.e, len(kept))
    new_h = new_model.divisor(*head, mults=kept)
    from .picard import invariants

    return AdjunctionStep(
        before=(model, h),
        after=(new_model, new_h),
        blown_down=len(removed),
        removed_indices=removed,
        invariants_before=invariants(h),
        invariants_after=invariants(new_h),
    )


def reverse_adjoin(
    model: SurfaceModel, h_next: DivisorClass, new_points: int
) -> tuple[SurfaceModel, DivisorClass]:
    """Inverse of :func:`adjoin`: blow up ``new_points`` fresh points and
    subtract the canonical class of the enlarged surface."""
    if new_points < 0:
        raise ValueError("new_points must be >= 0")
    if h_next.model != model:
        raise ValueError("class does not live on the given model")
    mults = [m + 1 for m in h_next.multiplicities] + [1] * new_points
    if model.kind == PLANE:
        new_model = plane_blowup(model.n + new_points)
        head = (h_next.coeffs[0] + 3,)
    else:
        new_model = hirzebruch_blowup(model.e, model.n + new_points)
        head = (h_next.coeffs[0] + 2, h_next.coeffs[1] + 2 - model.e)
    return new_model, new_model.divisor(*head, mults=mults)


def sequence(model: SurfaceModel, h: DivisorClass) -> AdjunctionSequence:
    """Iterate adjunction until the sectional genus is <= 5, then take the
    one further terminal step if it stays inside the model family."""
    if degree(h) <= 0:
        raise ValueError("sequence needs a class of positive degree")
    steps: list[AdjunctionStep] = []
    cur_model, cur = model, h
    genera = [sectional_genus(h)]
    while sectional_genus(cur) > 5:
        if len(steps) >= SEQUENCE_STEP_CAP:
            raise RuntimeError(f"adjunction did not terminate within {SEQUENCE_STEP_CAP} steps")
        try:
            step = adjoin(cur_model, cur)
        except LeavesFamilyError:
            break
        steps.append(step)
        cur_model, cur = step.after
        genera.append(sectional_genus(cur))
    else:
        # genus is now <= 5: one terminal step, if possible
        try:
            step = adjoin(cur_model, cur)
        except LeavesFamilyError:
            step = None
        if step is not None:
            steps.append(step)
            cur_model, cur = step.after
    n0 = next(i for i, g in enumerate(genera) if g <= 5)
    return AdjunctionSequence(tuple(steps), (cur_model, cur), n0)


def _ceil_div(num: int, den: int) -> int:
    """Ceiling of num/den for den > 0, rounding toward +infinity."""
    return -((-num) // den)


def hodge_upper_bound(h: DivisorClass) -> int:
    """ceil((H.K)^2 / H^2): the Hodge-index upper bound for K^2."""
    d = degree(h)
    if d <= 0:
        raise ValueError("Hodge bound needs positive degree")
    t = intersect(h, canonical(h.model))
    return _ceil_div(t * t, d)


def nondegeneracy_lower_bound(h: DivisorClass) -> int:
    """pi - 2 - H.(H + 2K): the nondegeneracy lower bound for K^2."""
    if degree(h) <= 0:
        raise ValueError("lower bound needs positive degree")
    k = canonical(h.model)
    return sectional_genus(h) - 2 - (intersect(h, h) + 2 * intersect(h, k))
