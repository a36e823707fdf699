"""Exact arithmetic in free graded polynomial rings truncated above a fixed weight.

A :class:`RingDescriptor` names an ordered list of weighted generators and a
truncation degree ``D``.  A :class:`GradedClass` is a sparse map from exponent
vectors to exact rational coefficients; every monomial of total weight above
``D`` is dropped as soon as it is produced.  This is all the structure needed
to model the Chow ring of a variety of dimension ``D`` when no relations are
imposed.
"""
from __future__ import annotations

import ast
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from operator import add
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class RingError(ValueError):
    """Raised on malformed rings or operations mixing incompatible rings."""


@dataclass(frozen=True)
class Generator:
    name: str
    weight: int


class RingDescriptor:
    """Ordered weighted generators together with a truncation degree."""

    __slots__ = ("generators", "truncation_degree", "names", "weights", "_index", "_hash")

    def __init__(self, generators: Sequence[Generator], truncation_degree: int):
        names = [g.name for g in generators]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise RingError(f"duplicate generator name(s): {', '.join(dup)}")
        for g in generators:
            if not isinstance(g.weight, int) or g.weight < 1:
                raise RingError(f"generator {g.name!r} must have positive integer weight, got {g.weight!r}")
            if not g.name.isidentifier():
                raise RingError(f"generator name {g.name!r} is not an identifier")
        if truncation_degree < 0:
            raise RingError("truncation degree must be non-negative")
        self.generators = tuple(generators)
        self.truncation_degree = int(truncation_degree)
        self.names = tuple(names)
        self.weights = tuple(g.weight for g in generators)
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash((self.generators, self.truncation_degree))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingDescriptor):
            return NotImplemented
        return self.generators == other.generators and self.truncation_degree == other.truncation_degree

    def __hash__(self):
        return self._hash

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.weight}" for g in self.generators)
        return f"RingDescriptor([{gens}], D={self.truncation_degree})"

    def __contains__(self, name: str) -> bool:
        return name in self._index

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"{name!r} is not a generator of {self!r}") from None

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    def monomial_weight(self, exps: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    # constructors -------------------------------------------------------

    def zero(self) -> GradedClass:
        return GradedClass._raw(self, {})

    def one(self) -> GradedClass:
        return self.const(1)

    def const(self, c: Scalar) -> GradedClass:
        c = _scalar(c)
        if not c:
            return self.zero()
        return GradedClass._raw(self, {(0,) * self.ngens: c})

    def gen(self, name: str) -> GradedClass:
        i = self.index(name)
        if self.weights[i] > self.truncation_degree:
            return self.zero()
        exps = [0] * self.ngens
        exps[i] = 1
        return GradedClass._raw(self, {tuple(exps): 1})

    def gens(self) -> tuple[GradedClass, ...]:
        return tuple(self.gen(n) for n in self.names)

    def from_terms(self, terms: Mapping[Sequence[int], Scalar]) -> GradedClass:
        return GradedClass(self, terms)

    def parse(self, text: str) -> GradedClass:
        """Parse an arithmetic expression in the generator names.

        Accepts ``+ - * /`` , ``^`` or ``**`` with non-negative integer
        exponents, integer literals and parentheses.  Division by a class with
        non-zero constant term expands as a series in this ring.
        """
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise RingError(f"cannot parse {text!r}: {exc.msg}") from None
        return _eval_ast(tree.body, self, text)

    # derived rings ------------------------------------------------------

    def extend(self, name: str, weight: int = 1) -> RingDescriptor:
        return RingDescriptor(self.generators + (Generator(name, weight),), self.truncation_degree)

    def without(self, name: str, truncation_degree: int | None = None) -> RingDescriptor:
        self.index(name)
        gens = tuple(g for g in self.generators if g.name != name)
        d = self.truncation_degree if truncation_degree is None else truncation_degree
        return RingDescriptor(gens, d)

    def with_truncation(self, truncation_degree: int) -> RingDescriptor:
        return RingDescriptor(self.generators, truncation_degree)


def make_ring(generators: Iterable[tuple[str, int]], truncation_degree: int) -> RingDescriptor:
    """Build a ring from ``(name, weight)`` pairs."""
    return RingDescriptor([Generator(n, w) for n, w in generators], truncation_degree)


def _scalar(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _scalar(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _scalar(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class GradedClass:
    """Immutable sparse truncated polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Mapping[Sequence[int], Scalar] | None = None):
        clean: dict[tuple[int, ...], Scalar] = {}
        n = ring.ngens
        D = ring.truncation_degree
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise RingError(f"bad exponent vector {exps} for {ring!r}")
            if ring.monomial_weight(exps) > D:
                continue
            c = _scalar(c)
            total = clean.get(exps, 0) + c
            if total:
                clean[exps] = total
            else:
                clean.pop(exps, None)
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        obj = object.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        return obj

    # basic protocol -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GradedClass):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"GradedClass({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> GradedClass:
        if isinstance(other, GradedClass):
            if other.ring != self.ring:
                raise RingError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        terms = dict(self.terms)
        for k, v in other.terms.items():
            s = terms.get(k, 0) + v
            if s:
                terms[k] = s
            else:
                del terms[k]
        return GradedClass._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass._raw(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> GradedClass:
        c = _scalar(c)
        if not c:
            return self.ring.zero()
        return GradedClass._raw(self.ring, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        other = self._coerce(other)
        return _multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / _scalar(other))
        if isinstance(other, GradedClass):
            return self * invert(self._coerce(other))
        return NotImplemented

    def __rtruediv__(self, other):
        return self.ring.const(other) * invert(self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # structure ----------------------------------------------------------

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.ring.ngens, 0)

    def weights(self) -> set[int]:
        mw = self.ring.monomial_weight
        return {mw(k) for k in self.terms}

    def is_homogeneous(self, weight: int | None = None) -> bool:
        ws = self.weights()
        if weight is None:
            return len(ws) <= 1
        return ws <= {weight}

    def support(self) -> set[str]:
        """Names of generators that occur with positive exponent."""
        used = set()
        for k in self.terms:
            for name, e in zip(self.ring.names, k):
                if e:
                    used.add(name)
        return used

    def component(self, w: int) -> GradedClass:
        mw = self.ring.monomial_weight
        return GradedClass._raw(self.ring, {k: v for k, v in self.terms.items() if mw(k) == w})

    def truncate(self, w: int) -> GradedClass:
        """Drop every term of weight above ``w`` (the ring is unchanged)."""
        mw = self.ring.monomial_weight
        return GradedClass._raw(self.ring, {k: v for k, v in self.terms.items() if mw(k) <= w})

    def decompose_by(self, name: str) -> list[GradedClass]:
        """Coefficients ``a_0 .. a_k``, free of ``name``, with ``self = sum a_i * name**i``."""
        i = self.ring.index(name)
        parts: dict[int, dict] = {}
        for k, v in self.terms.items():
            e = k[i]
            parts.setdefault(e, {})[k[:i] + (0,) + k[i + 1:]] = v
        if not parts:
            return []
        return [GradedClass._raw(self.ring, parts.get(e, {})) for e in range(max(parts) + 1)]

    def embed(self, ring: RingDescriptor) -> GradedClass:
        """Re-express this class in ``ring`` by matching generator names.

        Generators missing from ``ring`` must not occur in the class; terms
        that exceed the truncation degree of ``ring`` are dropped.
        """
        if ring == self.ring:
            return self
        for g in self.ring.generators:
            if g.name in ring and ring.weight(g.name) != g.weight:
                raise RingError(f"generator {g.name!r} has different weights in the two rings")
        pos = []
        for j, name in enumerate(self.ring.names):
            pos.append(ring._index.get(name))
        D = ring.truncation_degree
        mw = ring.monomial_weight
        terms = {}
        n = ring.ngens
        for k, v in self.terms.items():
            new = [0] * n
            for j, e in enumerate(k):
                if e:
                    p = pos[j]
                    if p is None:
                        raise RingError(f"generator {self.ring.names[j]!r} is absent from target ring")
                    new[p] = e
            new = tuple(new)
            if mw(new) <= D:
                terms[new] = v
        return GradedClass._raw(ring, terms)

    def substitute(self, name: str, replacement: GradedClass) -> GradedClass:
        """Replace the generator ``name`` by a homogeneous class of the same weight.

        The result lives in ``replacement.ring``; every other generator that
        occurs in ``self`` must also be a generator of that ring.
        """
        w = self.ring.weight(name)
        if not replacement.is_homogeneous(w):
            raise RingError(f"replacement for {name!r} must be homogeneous of weight {w}")
        target = replacement.ring
        others = self.support() - {name}
        missing = [g for g in others if g not in target]
        if missing:
            raise RingError(f"target ring lacks generator(s) {missing}")
        result = target.zero()
        power = target.one()
        for i, coeff in enumerate(self.decompose_by(name)):
            if i:
                power = power * replacement
            if coeff:
                result = result + coeff.embed(target) * power
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Numeric value at a point; generators absent from ``values`` must not occur."""
        total = Fraction(0)
        vals = []
        for name in self.ring.names:
            vals.append(values.get(name))
        for k, c in self.terms.items():
            t = Fraction(c)
            for j, e in enumerate(k):
                if e:
                    x = vals[j]
                    if x is None:
                        raise RingError(f"no value supplied for {self.ring.names[j]!r}")
                    t *= Fraction(x) ** e
            total += t
        return total

    # output -------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        mw = self.ring.monomial_weight
        return sorted(self.terms.items(), key=lambda kv: (mw(kv[0]), kv[0]))

    def to_text(self) -> str:
        """Canonical text: terms by (weight, exponent vector), coefficients as p/q."""
        return _render(self, _text_monomial, _text_coeff, "*")

    def to_latex(self) -> str:
        return _render(self, _latex_monomial, _latex_coeff, " ")


# --------------------------------------------------------------------------
# module-level operations


def add(a: GradedClass, b: GradedClass) -> GradedClass:
    return a + b


def mul(a: GradedClass, b: GradedClass) -> GradedClass:
    return a * b


def component(a: GradedClass, w: int) -> GradedClass:
    return a.component(w)


def decompose_by(a: GradedClass, g: str) -> list[GradedClass]:
    return a.decompose_by(g)


def substitute(a: GradedClass, g: str, replacement: GradedClass) -> GradedClass:
    return a.substitute(g, replacement)


def invert(a: GradedClass) -> GradedClass:
    """Multiplicative inverse of a class with non-zero constant term.

    Writes ``a = u (1 + n)`` with ``n`` of positive weight and sums the
    geometric series in ``n``, which terminates at the truncation degree.
    """
    ring = a.ring
    u = a.constant_term()
    if not u:
        raise ZeroDivisionError(f"{a.to_text()} has no constant term and is not invertible")
    inv_u = Fraction(1) / Fraction(u)
    inv_u = _scalar(inv_u)
    zero_key = (0,) * ring.ngens
    n = GradedClass._raw(ring, {k: v * inv_u for k, v in a.terms.items() if k != zero_key})
    if not n.terms:
        return ring.const(inv_u)
    # smallest weight in n bounds how many powers survive truncation
    min_w = min(n.weights())
    steps = ring.truncation_degree // min_w
    neg = -n
    result = ring.one()
    for _ in range(steps):
        result = ring.one() + neg * result
    return result.scale(inv_u)


def _multiply(a: GradedClass, b: GradedClass) -> GradedClass:
    ring = a.ring
    if not a.terms or not b.terms:
        return ring.zero()
    D = ring.truncation_degree
    mw = ring.monomial_weight
    if len(a.terms) < len(b.terms):
        a, b = b, a
    by_weight: dict[int, list] = {}
    for k, v in b.terms.items():
        by_weight.setdefault(mw(k), []).append((k, v))
    buckets = sorted(by_weight.items())
    out: dict[tuple[int, ...], Scalar] = {}
    get = out.get
    for k1, v1 in a.terms.items():
        room = D - mw(k1)
        for w2, items in buckets:
            if w2 > room:
                break
            for k2, v2 in items:
                k = tuple(map(add, k1, k2))
                out[k] = get(k, 0) + v1 * v2
    return GradedClass._raw(ring, {k: v for k, v in out.items() if v})


def _eval_ast(node, ring: RingDescriptor, text: str):
    if isinstance(node, ast.BinOp):
        left = _eval_ast(node.left, ring, text)
        right = _eval_ast(node.right, ring, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if isinstance(left, (int, Fraction)) and isinstance(right, (int, Fraction)):
                return _scalar(Fraction(left) / Fraction(right))
            if isinstance(left, (int, Fraction)):
                left = ring.const(left)
            return left / right
        if isinstance(node.op, ast.Pow):
            if not isinstance(right, int) or right < 0:
                raise RingError(f"exponents must be non-negative integers in {text!r}")
            return left ** right
    elif isinstance(node, ast.UnaryOp):
        operand = _eval_ast(node.operand, ring, text)
        if isinstance(node.op, ast.USub):
            return -operand
        if isinstance(node.op, ast.UAdd):
            return operand
    elif isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return node.value
    elif isinstance(node, ast.Name):
        return ring.gen(node.id)
    raise RingError(f"unsupported syntax in {text!r}")


def _text_coeff(c: Scalar) -> str:
    c = _scalar(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _latex_coeff(c: Scalar) -> str:
    c = _scalar(c)
    if isinstance(c, Fraction):
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return str(c)


def _text_monomial(ring, exps):
    parts = []
    for name, e in zip(ring.names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return parts


def _latex_name(name: str) -> str:
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    return f"{head}_{{{tail}}}" if tail and head else name


def _latex_monomial(ring, exps):
    parts = []
    for name, e in zip(ring.names, exps):
        if e == 1:
            parts.append(_latex_name(name))
        elif e:
            parts.append(f"{_latex_name(name)}^{{{e}}}")
    return parts


def _render(a: GradedClass, monomial, coeff, sep) -> str:
    if not a.terms:
        return "0"
    out = []
    for exps, c in a.sorted_terms():
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        mono = monomial(a.ring, exps)
        if not mono:
            body = coeff(mag)
        elif mag == 1:
            body = sep.join(mono)
        else:
            body = sep.join([coeff(mag)] + mono)
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)
