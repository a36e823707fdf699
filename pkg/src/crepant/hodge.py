"""Hodge numbers of Calabi-Yau threefold G-models over rational surfaces.

Everything is expressed in the formal intersection numbers ``K^2``, ``K.S``
and ``S^2`` of the base, using ``c1(TB) = -K`` and ``h11(B) = 10 - K^2``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .gradedring import GradedClass, make_ring
from .models import ModelSpec, _as_model, catalog, euler_polynomial, reference_rows

K_RING = make_ring([("K", 1), ("S", 1)], 2)


@dataclass(frozen=True)
class HodgePair:
    h11: GradedClass
    h21: GradedClass
    chi: GradedClass

    def to_text(self) -> str:
        return f"h11 = {self.h11.to_text()}; h21 = {self.h21.to_text()}; chi = {self.chi.to_text()}"


def hodge_cy3(model: ModelSpec | str, sign: int = -1) -> HodgePair:
    """Shioda-Tate-Wazir Hodge numbers; ``sign`` fixes ``c1 = sign * K``."""
    model = _as_model(model)
    chi_base = euler_polynomial(model, 2, calabi_yau=True)
    chi = chi_base.substitute("c1", sign * K_RING.gen("K"))
    K = K_RING.gen("K")
    h11 = K_RING.const(10 + model.fibral_divisors + 1) - K * K
    h21 = h11 - chi / 2
    return HodgePair(h11, h21, chi)


def sign_convention_check(sign: int = -1) -> bool:
    """True when every stored Hodge row is reproduced with ``c1 = sign * K``."""
    checked = 0
    for model in catalog():
        rows = reference_rows(model, "Table15")
        if not rows:
            continue
        pair = hodge_cy3(model, sign)
        for r in rows:
            checked += 1
            if K_RING.parse(r.expr) != getattr(pair, r.quantity):
                return False
    return checked > 0
