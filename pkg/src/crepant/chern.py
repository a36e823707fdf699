"""Total Chern classes of Weierstrass models and of their blowup resolutions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

from .gradedring import GradedClass, RingDescriptor, RingError, invert, make_ring
from .pushforward import BlowupStep, blowup_pushforward, projective_bundle_pushforward

Center = Union[GradedClass, str]


def base_chern_names(base_dim: int) -> list[str]:
    return [f"c{i}" for i in range(1, base_dim + 1)]


def base_ring(base_dim: int) -> RingDescriptor:
    """``A_*(B)``: generators ``L, S, c1..c_d`` truncated at ``d``."""
    gens = [("L", 1), ("S", 1)] + [(c, i) for i, c in enumerate(base_chern_names(base_dim), 1)]
    return make_ring(gens, base_dim)


def ambient_ring(base_dim: int, with_base_chern: bool = True) -> RingDescriptor:
    """``A_*(X_0)`` for ``X_0 = P(O + L^2 + L^3)``; truncation ``d + 2``."""
    gens = [("H", 1), ("L", 1), ("S", 1)]
    if with_base_chern:
        gens += [(c, i) for i, c in enumerate(base_chern_names(base_dim), 1)]
    return make_ring(gens, base_dim + 2)


def base_chern(ring: RingDescriptor) -> GradedClass:
    """``1 + c1 + c2 + ...`` over whichever ``c_i`` the ring carries."""
    total = ring.one()
    i = 1
    while f"c{i}" in ring:
        total = total + ring.gen(f"c{i}")
        i += 1
    return total


def ambient_chern_x0(base_dim: int, ring: RingDescriptor | None = None) -> GradedClass:
    """``c(X_0) = (1+H)(1+H+3L)(1+H+2L) c(B)``."""
    if ring is None:
        ring = ambient_ring(base_dim)
    one, H, L = ring.one(), ring.gen("H"), ring.gen("L")
    return (one + H) * (one + H + 3 * L) * (one + H + 2 * L) * base_chern(ring)


def weierstrass_chern(base_dim: int, ring: RingDescriptor | None = None) -> GradedClass:
    """``c(Y_0) = (3H+6L) c(X_0) / (1+3H+6L)``."""
    if ring is None:
        ring = ambient_ring(base_dim)
    Y = 3 * ring.gen("H") + 6 * ring.gen("L")
    return Y * invert(ring.one() + Y) * ambient_chern_x0(base_dim, ring)


def aluffi_factor(ring: RingDescriptor, centers: Sequence[GradedClass], E: str) -> GradedClass:
    """``(1+E) prod (1+Z_i-E)/(1+Z_i)`` in ``ring``, which must contain ``E``."""
    one = ring.one()
    e = ring.gen(E)
    factor = one + e
    for z in centers:
        z = z.embed(ring)
        factor = factor * (one + z - e) * invert(one + z)
    return factor


@dataclass(frozen=True)
class ResolutionState:
    """Ambient space ``X_n`` after ``n`` blowups together with ``[Y_n]``.

    ``factors`` holds ``c(X_0)`` followed by one Aluffi factor per step, each
    in the ring where it was created; ``ambient_chern`` is their product.
    """

    ring: RingDescriptor
    hypersurface_class: GradedClass
    steps: tuple[BlowupStep, ...]
    factors: tuple[GradedClass, ...]

    @cached_property
    def ambient_chern(self) -> GradedClass:
        total = self.ring.one()
        for f in self.factors:
            total = total * f.embed(self.ring)
        return total

    @property
    def exceptional_names(self) -> list[str]:
        return [s.exceptional for s in self.steps]


def initial_state(base_dim: int, with_base_chern: bool = True) -> ResolutionState:
    """Unresolved Weierstrass model ``Y_0 = 3H + 6L`` inside ``X_0``.

    With ``with_base_chern=False`` the factor ``c(B)`` is left out; by the
    projection formula it can be multiplied back after pushing to the base.
    """
    ring = ambient_ring(base_dim, with_base_chern)
    Y = 3 * ring.gen("H") + 6 * ring.gen("L")
    return ResolutionState(ring, Y, (), (ambient_chern_x0(base_dim, ring),))


def apply_blowup(
    state: ResolutionState,
    centers: Sequence[Center],
    E: str,
    multiplicity: int | None = None,
) -> ResolutionState:
    """Blow up ``X_n`` along ``centers`` and take the proper transform of ``Y``."""
    if E in state.ring:
        raise RingError(f"generator {E!r} already present")
    if len(centers) < 2:
        raise RingError("a blowup center needs at least two hypersurfaces")
    zs = tuple(state.ring.parse(z) if isinstance(z, str) else z.embed(state.ring) for z in centers)
    step = BlowupStep(zs, E, multiplicity)
    ring = state.ring.extend(E, 1)
    Y = state.hypersurface_class.embed(ring) - step.multiplicity * ring.gen(E)
    return ResolutionState(ring, Y, state.steps + (step,), state.factors + (aluffi_factor(ring, zs, E),))


def resolve(base_dim: int, recipe: Sequence[Sequence[Center]], with_base_chern: bool = True,
            multiplicities: Sequence[int | None] | None = None) -> ResolutionState:
    state = initial_state(base_dim, with_base_chern)
    for n, centers in enumerate(recipe, 1):
        m = None if multiplicities is None else multiplicities[n - 1]
        state = apply_blowup(state, centers, f"E{n}", m)
    return state


def tangent_chern(state: ResolutionState) -> GradedClass:
    """``c(TY) = c(TX_n) / (1 + [Y])``."""
    return state.ambient_chern * invert(state.ring.one() + state.hypersurface_class)


def resolved_chern(state: ResolutionState) -> GradedClass:
    """Homological total Chern class ``c(TY) cap [Y]`` as a class on ``X_n``."""
    Y = state.hypersurface_class
    return Y * tangent_chern(state)


def crepancy_check(state: ResolutionState) -> bool:
    """First-order check that no exceptional divisor survives in ``c_1(TY)``."""
    c1 = tangent_chern(state).component(1)
    return not (c1.support() & set(state.exceptional_names))


def push_chain(a: GradedClass, steps: Sequence[BlowupStep]) -> GradedClass:
    """Apply the blowup pushforwards in reverse order of the blowups."""
    for step in reversed(steps):
        a = blowup_pushforward(a.embed(step.ring.extend(step.exceptional)), step)
    return a


def push_to_base(state: ResolutionState, staged: bool = True) -> GradedClass:
    """``pi_* f_* c(Y)`` as a class on the base.

    The staged route multiplies in each Aluffi factor only once the
    exceptional divisors it does not contain have been pushed away (projection
    formula).  ``staged=False`` forms ``c(Y)`` on ``X_n`` in full and pushes it.
    """
    if not staged:
        return projective_bundle_pushforward(push_chain(resolved_chern(state), state.steps))
    ring = state.ring
    Y = state.hypersurface_class
    current = Y * invert(ring.one() + Y)
    for step, factor in zip(reversed(state.steps), reversed(state.factors[1:])):
        upper = step.ring.extend(step.exceptional)
        current = current.embed(upper) * factor.embed(upper)
        current = blowup_pushforward(current, step)
    current = current * state.factors[0].embed(current.ring)
    return projective_bundle_pushforward(current)
