"""Pushforwards along blowups and along the Weierstrass projective bundle.

Blowup pushforwards stay inside polynomial arithmetic: powers of the
exceptional divisor push to complete homogeneous symmetric polynomials in the
center classes.  The rational "moment" form of the same pushforward is kept
only as a numeric oracle for testing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .gradedring import GradedClass, RingDescriptor, RingError, make_ring


class DegenerateSample(ZeroDivisionError):
    """A numeric sample made two center classes coincide; draw another one."""


@dataclass(frozen=True)
class BlowupStep:
    """Blowup along a complete intersection ``Z_1 = ... = Z_d = 0``.

    ``centers`` live in the ring *before* the blowup; ``exceptional`` names the
    new divisor.  ``multiplicity`` is how many copies of the exceptional
    divisor are removed from the total transform of the hypersurface, which is
    ``codim - 1`` for a crepant step.
    """

    centers: tuple[GradedClass, ...]
    exceptional: str
    multiplicity: int | None = None
    _series: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        centers = tuple(self.centers)
        object.__setattr__(self, "centers", centers)
        if not centers:
            raise RingError("a blowup needs at least one center class")
        ring = centers[0].ring
        for z in centers:
            if z.ring != ring:
                raise RingError("center classes must share a ring")
            if not z or not z.is_homogeneous(1):
                raise RingError(f"center class {z.to_text()} is not homogeneous of weight 1")
        if self.exceptional in ring:
            raise RingError(f"exceptional divisor {self.exceptional!r} already exists in the center ring")
        if self.multiplicity is None:
            object.__setattr__(self, "multiplicity", len(centers) - 1)

    @property
    def codim(self) -> int:
        return len(self.centers)

    @property
    def ring(self) -> RingDescriptor:
        return self.centers[0].ring

    def center_product(self) -> GradedClass:
        key = "prod"
        if key not in self._series:
            p = self.ring.one()
            for z in self.centers:
                p = p * z
            self._series[key] = p
        return self._series[key]

    def complete_series(self) -> GradedClass:
        """``prod 1/(1 - Z_l)``; its weight-r part is ``h_r(Z_1..Z_d)``."""
        key = "h"
        if key not in self._series:
            self._series[key] = complete_homogeneous_series(self.centers)
        return self._series[key]


def complete_homogeneous_series(classes: Sequence[GradedClass]) -> GradedClass:
    from .gradedring import invert

    ring = classes[0].ring
    g = ring.one()
    for z in classes:
        g = g * invert(ring.one() - z)
    return g


def complete_homogeneous(r: int, classes: Sequence[GradedClass]) -> GradedClass:
    """``h_r`` of weight-1 classes; zero for ``r < 0`` and one for ``r = 0``."""
    ring = classes[0].ring
    if r < 0:
        return ring.zero()
    return complete_homogeneous_series(classes).component(r)


def exceptional_power_pushforward(n: int, step: BlowupStep) -> GradedClass:
    """``f_* E^n`` as a class in the ring of the centers."""
    if n < 0:
        raise ValueError("n must be non-negative")
    ring = step.ring
    if n == 0:
        # f_* [X~] = [X]
        return ring.one()
    d = step.codim
    if n < d:
        return ring.zero()
    sign = 1 if d % 2 else -1
    return (step.complete_series().component(n - d) * step.center_product()).scale(sign)


def blowup_pushforward(a: GradedClass, step: BlowupStep) -> GradedClass:
    """Push a class on the blowup down to the ring of the centers.

    Writes ``a = sum a_i E^i`` with ``a_i`` pulled back from below and uses
    linearity: ``f_* a = a_0 + (-1)^(d+1) Z_1..Z_d * sum_{i>=d} a_i h_{i-d}(Z)``.
    """
    target = step.ring
    E = step.exceptional
    parts = a.decompose_by(E)
    if not parts:
        return target.zero()
    d = step.codim
    result = parts[0].embed(target)
    tail = target.zero()
    hs = step.complete_series()
    for i in range(d, len(parts)):
        coeff = parts[i]
        if not coeff:
            continue
        h = hs.component(i - d)
        if h:
            tail = tail + coeff.embed(target) * h
    if tail:
        sign = 1 if d % 2 else -1
        result = result + (tail * step.center_product()).scale(sign)
    return result


def moment_oracle(n: int, step: BlowupStep, sample: Mapping[str, Fraction]) -> Fraction:
    """Numeric ``sum_l Z_l^n M_l`` with ``M_l = prod_{m != l} Z_m / (Z_m - Z_l)``."""
    values = [Fraction(z.evaluate(sample)) for z in step.centers]
    total = Fraction(0)
    for l, zl in enumerate(values):
        moment = Fraction(1)
        for m, zm in enumerate(values):
            if m == l:
                continue
            if zm == zl:
                raise DegenerateSample(f"centers {l} and {m} coincide at the sample")
            moment *= zm / (zm - zl)
        total += zl ** n * moment
    return total


def projective_bundle_pushforward(a: GradedClass, H: str = "H", L: str = "L") -> GradedClass:
    """Push from ``P(O + L^2 + L^3)`` to its base.

    ``1`` and ``H`` push to zero and ``H^(i+2)`` pushes to
    ``(-2 (-2)^i + 3 (-3)^i) L^i``.  The base ring drops ``H`` and has
    truncation degree two lower.
    """
    ring = a.ring
    ih = ring.index(H)
    il = ring.index(L)
    if ring.weights[ih] != 1 or ring.weights[il] != 1:
        raise RingError("H and L must both have weight 1")
    base = ring.without(H, max(ring.truncation_degree - 2, 0))
    jl = base.index(L)
    D = base.truncation_degree
    mw = base.monomial_weight
    out: dict[tuple[int, ...], object] = {}
    for k, v in a.terms.items():
        p = k[ih]
        if p < 2:
            continue
        i = p - 2
        factor = -2 * (-2) ** i + 3 * (-3) ** i
        rest = list(k[:ih] + k[ih + 1:])
        rest[jl] += i
        rest = tuple(rest)
        if mw(rest) > D:
            continue
        out[rest] = out.get(rest, 0) + v * factor
    return GradedClass(base, out)


def jacobi_identity_check(r: int, d: int, sample: Sequence[Fraction]) -> bool:
    """Compare ``h_r(x)`` with ``sum_l x_l^(r+d-1) / prod_{m != l} (x_l - x_m)`` exactly."""
    xs = [Fraction(x) for x in sample]
    if len(xs) != d:
        raise ValueError(f"expected {d} sample values, got {len(xs)}")
    if len(set(xs)) != d:
        raise ValueError("sample values must be pairwise distinct")
    ring = make_ring([(f"x{i + 1}", 1) for i in range(d)], max(r, 0))
    if r < 0:
        lhs = Fraction(0)
    else:
        h = complete_homogeneous(r, ring.gens())
        lhs = h.evaluate({f"x{i + 1}": x for i, x in enumerate(xs)})
    rhs = Fraction(0)
    for l, xl in enumerate(xs):
        denom = Fraction(1)
        for m, xm in enumerate(xs):
            if m != l:
                denom *= xl - xm
        rhs += xl ** (r + d - 1) / denom
    return lhs == rhs
