import pytest

from crepant.hodge import K_RING, hodge_cy3, sign_convention_check
from crepant.models import catalog

P = K_RING.parse


@pytest.mark.parametrize("key, h11, h21, chi", [
    ("SU2", "12 - K^2", "12 + 29*K^2 + 15*K*S + 3*S^2", "-60*K^2 - 30*K*S - 6*S^2"),
    ("E8", "19 - K^2", "19 + 29*K^2 + 60*K*S + 30*S^2", None),
    ("SmoothWeierstrass", "11 - K^2", "11 + 29*K^2", "-60*K^2"),
    ("SO3", "12 - K^2", "12 + 17*K^2", "-36*K^2"),
    ("Spin10", "16 - K^2", None, None),
])
def test_hodge_examples(key, h11, h21, chi):
    pair = hodge_cy3(key)
    assert pair.h11 == P(h11)
    if h21:
        assert pair.h21 == P(h21)
    if chi:
        assert pair.chi == P(chi)


@pytest.mark.parametrize("model", catalog(), ids=lambda m: m.key)
def test_chi_is_twice_hodge_difference(model):
    pair = hodge_cy3(model)
    assert pair.chi == 2 * (pair.h11 - pair.h21)


def test_sign_convention():
    assert sign_convention_check()
    assert not sign_convention_check(sign=+1)


def test_flipped_sign_breaks_rows_with_KS_terms():
    for model in catalog():
        good, bad = hodge_cy3(model), hodge_cy3(model, sign=+1)
        has_ks = any(exps == (1, 1) for exps in good.chi.terms)
        assert (good.chi != bad.chi) == has_ks


@pytest.mark.parametrize("chain", [
    ("SmoothWeierstrass", "SU2", "SU3", "SU4", "SU5"),
    ("G2", "Spin7", "Spin8", "Spin10", "E6", "E7", "E8"),
    ("SU2", "G2", "F4", "E6"),
])
def test_h11_steps_follow_rank(chain):
    for a, b in zip(chain, chain[1:]):
        ha, hb = hodge_cy3(a), hodge_cy3(b)
        ra, rb = (next(m.rank for m in catalog() if m.key == k) for k in (a, b))
        assert hb.h11 - ha.h11 == rb - ra
