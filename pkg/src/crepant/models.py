"""Catalog of G-models and the end-to-end Euler characteristic pipeline."""
from __future__ import annotations

import ast
import fnmatch
from dataclasses import dataclass, field
from functools import lru_cache

from .chern import base_chern, base_ring, push_to_base, resolve
from .fixtures import FixtureRow, fixture_path, load_fixtures
from .gradedring import GradedClass, RingDescriptor, RingError, invert, make_ring

# One tuple of center classes per blowup, in blowup order.
_X = ("H+2*L", "H+3*L", "S")
_SU3 = (_X, ("H+3*L-E1", "E1"))
_SU4 = _SU3 + (("H+2*L-E1", "E2"),)

RECIPES: dict[str, tuple[tuple[str, ...], ...]] = {
    "SmoothWeierstrass": (),
    "SU2": (_X,),
    "SU3": _SU3,
    "USp4": _SU3,
    "G2": _SU3,
    "SU4": _SU4,
    "Spin7": _SU4,
    "Spin8": _SU4 + (("H+2*L-E1", "E2-E3"),),
    "F4": _SU4 + (("E2-E3", "E3"),),
    "SU5": (
        _X,
        ("H+2*L-E1", "H+3*L-E1", "E1"),
        ("H+3*L-E1-E2", "E1-E2"),
        ("H+3*L-E1-E2-E3", "E2"),
    ),
    "Spin10": _SU4 + (("H+3*L-E1-E2", "E3"), ("E2-E3", "E3-E4")),
    "E6": _SU4 + (
        ("E2-E3", "E3"),
        ("H+3*L-E1-E2", "E3-E4"),
        ("H+3*L-E1-E2-E5", "E4"),
    ),
    "E7": _SU4 + (
        ("H+3*L-E1-E2", "E3"),
        ("E2-E3", "E3-E4"),
        ("E2-E3-E5", "E4"),
        ("E4-E6", "E5"),
    ),
    "E8": _SU4 + (
        ("H+3*L-E1-E2", "E3"),
        ("E2-E3", "E3-E4"),
        ("E4", "E5"),
        ("E2-E3-E5", "E4-E6", "E6"),
        ("E4-E6-E7", "E7"),
    ),
    "SO3": (("H+2*L", "H+3*L"),),
    "SO5": (("H+2*L", "H+3*L", "2*L"), ("H+2*L-E1", "H+3*L-E1", "E1")),
    "SO6": _SU4,
}

# Blowup labels (generators | new divisor), for display.
_SEQ1 = ("(x,y,s|e1)",)
_SEQ2 = _SEQ1 + ("(y,e1|e2)",)
_SEQ3 = _SEQ2 + ("(x,e2|e3)",)
SEQUENCES = {
    "SmoothWeierstrass": (),
    "SU2": _SEQ1,
    "SU3": _SEQ2, "USp4": _SEQ2, "G2": _SEQ2,
    "SU4": _SEQ3, "Spin7": _SEQ3, "SO6": _SEQ3,
    "Spin8": _SEQ2 + ("(x-x_i s z,e2|e3)", "(x-x_j s z,e2|e4)"),
    "F4": _SEQ3 + ("(e3,e2|e4)",),
    "SU5": _SEQ1 + ("(x,y,e1|e2)", "(y,e1|e3)", "(y,e2|e4)"),
    "Spin10": _SEQ3 + ("(y,e3|e4)", "(e2,e3|e5)"),
    "E6": _SEQ3 + ("(e2,e3|e4)", "(y,e3|e5)", "(y,e4|e6)"),
    "E7": _SEQ3 + ("(y,e3|e4)", "(e2,e3|e5)", "(e2,e4|e6)", "(e4,e5|e7)"),
    "E8": _SEQ3 + ("(y,e3|e4)", "(e2,e3|e5)", "(e4,e5|e6)", "(e2,e4,e6|e7)", "(e4,e7|e8)"),
    "SO3": ("(x,y|e1)",),
    "SO5": _SEQ1 + ("(x,y,e1|e2)",),
}

# key, group, algebra, rank, Kodaira fibers, S -> k L
_META = (
    ("SmoothWeierstrass", "{e}", "-", 0, ("I1",), None),
    ("SU2", "SU(2)", "A1", 1, ("I2s", "I2ns", "I3ns", "III", "IVns"), None),
    ("SU3", "SU(3)", "A2", 2, ("I3s", "IVs"), None),
    ("USp4", "USp(4)", "C2", 2, ("I4ns",), None),
    ("G2", "G2", "G2", 2, ("I0*ns",), None),
    ("SU4", "SU(4)", "A3", 3, ("I4s",), None),
    ("Spin7", "Spin(7)", "B3", 3, ("I0*ss",), None),
    ("Spin8", "Spin(8)", "D4", 4, ("I0*s",), None),
    ("F4", "F4", "F4", 4, ("IV*ns",), None),
    ("SU5", "SU(5)", "A4", 4, ("I5s",), None),
    ("Spin10", "Spin(10)", "D5", 5, ("I1*s",), None),
    ("E6", "E6", "E6", 6, ("IV*s",), None),
    ("E7", "E7", "E7", 7, ("III*",), None),
    ("E8", "E8", "E8", 8, ("II*",), None),
    ("SO3", "SO(3)", "A1", 1, ("I2ns",), 4),
    ("SO5", "SO(5)", "B2", 2, ("I4ns",), 2),
    ("SO6", "SO(6)", "A3", 3, ("I4s",), 2),
)

# The published Hodge row for SO(5) has h11 = 14 - K^2, i.e. three fibral
# divisors rather than rank(B2) = 2.
_HODGE_F = {"SO5": 3}

COINCIDENCES = (("SU3", "USp4", "G2"), ("SU4", "Spin7"), ("Spin8", "F4"))


@dataclass(frozen=True)
class RationalExpr:
    """Quotient of two integer polynomials in ``L`` and ``S``."""

    numerator: str
    denominator: str

    @classmethod
    def parse(cls, text: str) -> RationalExpr:
        tree = ast.parse(text.replace("^", "**"), mode="eval").body
        if isinstance(tree, ast.BinOp) and isinstance(tree.op, ast.Div):
            num, den = ast.unparse(tree.left), ast.unparse(tree.right)
        else:
            num, den = ast.unparse(tree), "1"
        return cls(num.replace("**", "^"), den.replace("**", "^"))

    def series(self, ring: RingDescriptor) -> GradedClass:
        num = ring.parse(self.numerator)
        den = ring.parse(self.denominator)
        c0 = den.constant_term()
        if not c0:
            raise RingError(f"denominator {self.denominator} has no constant term")
        return num * invert(den)

    def __str__(self):
        return f"({self.numerator})/({self.denominator})"


@dataclass(frozen=True)
class ModelSpec:
    key: str
    group: str
    algebra: str
    rank: int
    kodaira_fibers: tuple[str, ...]
    steps: tuple[tuple[str, ...], ...]
    blowups: tuple[str, ...] = ()
    s_specialization: int | None = None
    hodge_f: int | None = None
    reference_genfun: RationalExpr | None = field(default=None, compare=False)
    reference_chi: tuple[FixtureRow, ...] = field(default=(), compare=False, repr=False)

    @property
    def fibral_divisors(self) -> int:
        return self.rank if self.hodge_f is None else self.hodge_f


@lru_cache(maxsize=8)
def _catalog(directory: str) -> tuple[ModelSpec, ...]:
    rows = load_fixtures(directory)
    by_model: dict[str, list[FixtureRow]] = {}
    for r in rows:
        by_model.setdefault(r.model, []).append(r)
    out = []
    for key, group, algebra, rank, fibers, spec in _META:
        refs = tuple(by_model.get(key, ()))
        genfun = next((RationalExpr.parse(r.expr) for r in refs if r.table == "Table11"), None)
        out.append(ModelSpec(
            key=key, group=group, algebra=algebra, rank=rank, kodaira_fibers=fibers,
            steps=RECIPES[key], blowups=SEQUENCES[key], s_specialization=spec,
            hodge_f=_HODGE_F.get(key), reference_genfun=genfun, reference_chi=refs,
        ))
    return tuple(out)


def catalog() -> tuple[ModelSpec, ...]:
    """All 17 models, with reference data from the active fixture file."""
    return _catalog(str(fixture_path().parent))


def get_model(key: str) -> ModelSpec:
    for m in catalog():
        if m.key == key:
            return m
    for m in catalog():
        if m.key.lower() == key.lower():
            return m
    raise KeyError(f"unknown model {key!r}")


def filter_models(pattern: str | None = None) -> list[ModelSpec]:
    models = list(catalog())
    if not pattern:
        return models
    return [m for m in models if fnmatch.fnmatchcase(m.key, pattern)]


def _as_model(model) -> ModelSpec:
    return model if isinstance(model, ModelSpec) else get_model(model)


# pipeline -----------------------------------------------------------------

_FIBER_CACHE: dict[tuple, GradedClass] = {}


def fiber_series(model, order: int, staged: bool = True) -> GradedClass:
    """``pi_* f_* c(Y)`` with ``c(B)`` factored out: the series ``Q(L, S)``.

    The result lives in the ring ``(L, S)`` truncated at ``order``; no
    S-specialization is applied.
    """
    model = _as_model(model)
    if order < 0:
        raise ValueError("order must be non-negative")
    key = (model.key, model.steps, staged)
    cached = _FIBER_CACHE.get(key)
    target = make_ring([("L", 1), ("S", 1)], order)
    if cached is not None and cached.ring.truncation_degree >= order:
        return cached.truncate(order).embed(target)
    state = resolve(order, model.steps, with_base_chern=False)
    q = push_to_base(state, staged=staged)
    _FIBER_CACHE[key] = q
    return q.embed(target)


def specialize(cls: GradedClass, model: ModelSpec) -> GradedClass:
    if model.s_specialization is None or "S" not in cls.ring:
        return cls
    ring = cls.ring
    return cls.substitute("S", model.s_specialization * ring.gen("L"))


def euler_class(model, base_dim: int) -> GradedClass:
    """``pi_* f_* c(Y)`` in ``A_*(B)`` through weight ``base_dim``."""
    model = _as_model(model)
    if base_dim < 1:
        raise ValueError("base dimension must be at least 1")
    ring = base_ring(base_dim)
    q = specialize(fiber_series(model, base_dim).embed(ring), model)
    return q * base_chern(ring)


def euler_class_direct(model, base_dim: int, staged: bool = False) -> GradedClass:
    """Same as :func:`euler_class` but with ``c(B)`` carried through every pushforward."""
    model = _as_model(model)
    state = resolve(base_dim, model.steps, with_base_chern=True)
    return specialize(push_to_base(state, staged=staged).embed(base_ring(base_dim)), model)


def euler_polynomial(model, base_dim: int, calabi_yau: bool = False) -> GradedClass:
    """Euler characteristic over a base of dimension ``base_dim``."""
    cls = euler_class(model, base_dim)
    if calabi_yau:
        cls = cls.substitute("L", cls.ring.gen("c1"))
    return cls.component(base_dim)


def expand_reference(model, order: int) -> GradedClass:
    """Series of the stored closed-form generating function times ``c(B)``."""
    model = _as_model(model)
    if model.reference_genfun is None:
        raise LookupError(f"no reference generating function for {model.key}")
    ring = base_ring(order)
    return model.reference_genfun.series(ring) * base_chern(ring)


def reference_rows(model, table: str | None = None) -> list[FixtureRow]:
    model = _as_model(model)
    return [r for r in model.reference_chi if table is None or r.table == table]


# verification -------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    model: str
    table: str
    row: str
    passed: bool
    expected: str
    computed: str


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __len__(self):
        return len(self.checks)


SCOPES = ("Table11", "Table12", "Table13", "Table14", "Table15", "Section5", "coincidences")


def normalize_scope(scope: str) -> tuple[str, ...]:
    s = scope.strip()
    if s.lower() == "all":
        return SCOPES
    if s.lower() == "table11-series":
        return ("Table11",)
    for known in SCOPES:
        if s.lower() == known.lower():
            return (known,)
    raise ValueError(f"unknown scope {scope!r}; choose from all, {', '.join(SCOPES)}")


def _check_chi_row(row: FixtureRow) -> CheckResult:
    ring = base_ring(row.base_dim)
    expected = ring.parse(row.expr).component(row.base_dim)
    computed = euler_polynomial(row.model, row.base_dim, row.cy)
    label = f"dim={row.base_dim} cy={int(row.cy)}"
    return CheckResult(row.model, row.table, label, expected.to_text() == computed.to_text(),
                       expected.to_text(), computed.to_text())


def verify_against_paper(scope: str = "all", order: int = 5) -> VerificationReport:
    """Compare computed classes with every stored reference row in ``scope``."""
    from .hodge import K_RING, hodge_cy3

    report = VerificationReport()
    for table in normalize_scope(scope):
        if table == "coincidences":
            for group in COINCIDENCES:
                first = euler_class(group[0], order)
                for other in group[1:]:
                    cls = euler_class(other, order)
                    report.checks.append(CheckResult(
                        other, "coincidences", f"{group[0]}=={other} order={order}",
                        cls == first, first.to_text(), cls.to_text()))
            continue
        for model in catalog():
            rows = reference_rows(model, table)
            if table == "Table11":
                if model.reference_genfun is None:
                    continue
                ref = expand_reference(model, order)
                got = euler_class(model, order)
                report.checks.append(CheckResult(
                    model.key, table, f"series order={order}", ref == got, ref.to_text(), got.to_text()))
            elif table == "Table15":
                if not rows:
                    continue
                pair = hodge_cy3(model)
                for r in rows:
                    exp = K_RING.parse(r.expr)
                    got = getattr(pair, r.quantity)
                    report.checks.append(CheckResult(
                        model.key, table, r.quantity, exp.to_text() == got.to_text(),
                        exp.to_text(), got.to_text()))
            else:
                for r in rows:
                    report.checks.append(_check_chi_row(r))
    return report
