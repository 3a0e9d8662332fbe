"""Boolean power series in loop parameters and the idempotent completion.

Exponent vectors ``ν`` are stored as sorted tuples of ``(color, exponent)``
with zero exponents dropped, so ``()`` is the constant monomial.  A
:class:`BoolSeries` is a finite set of such monomials: Boolean coefficients
make addition a union and the Cauchy product a sumset.

A :class:`QElement` assigns a series to finitely many loop-free diagrams.
Two composition-style products extend diagram composition and tensor
bilinearly; loops created along the way are pulled out of the diagram and
into the series as ``q``-monomials.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from . import diagram as dg
from .diagram import Diagram

Monomial = tuple  # tuple[tuple[int, int], ...]


def monomial(exponents: Mapping[int, int] | Iterable = ()) -> Monomial:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: Counter = Counter()
    for k, e in items:
        if int(e) < 0:
            raise ValueError("exponents must be natural numbers")
        acc[int(k)] += int(e)
    return tuple(sorted((k, e) for k, e in acc.items() if e))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    acc = Counter(dict(a))
    acc.update(dict(b))
    return tuple(sorted(acc.items()))


def monomial_str(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(f"q{k}" if e == 1 else f"q{k}^{e}" for k, e in m)


class BoolSeries:
    """Finitely supported power series over the Boolean semiring."""

    __slots__ = ("support",)

    def __init__(self, support: Iterable = ()):
        self.support = frozenset(monomial(m) for m in support)

    @classmethod
    def zero(cls) -> "BoolSeries":
        return cls()

    @classmethod
    def one(cls) -> "BoolSeries":
        return cls([()])

    @classmethod
    def q(cls, k: int, e: int = 1) -> "BoolSeries":
        """The single monomial ``q_k^e``."""
        return cls([((k, e),)])

    @classmethod
    def of(cls, *exponents: Mapping[int, int]) -> "BoolSeries":
        """``BoolSeries.of({0: 1}, {})`` is ``q0 + 1``."""
        return cls(monomial(e) for e in exponents)

    def __add__(self, other: "BoolSeries") -> "BoolSeries":
        out = object.__new__(BoolSeries)
        out.support = self.support | other.support
        return out

    def __mul__(self, other: "BoolSeries") -> "BoolSeries":
        out = object.__new__(BoolSeries)
        out.support = frozenset(monomial_mul(a, b) for a in self.support for b in other.support)
        return out

    def __le__(self, other: "BoolSeries") -> bool:
        """Natural order of an idempotent monoid: ``a <= b`` iff ``a + b == b``."""
        return self + other == other

    def __eq__(self, other):
        if not isinstance(other, BoolSeries):
            return NotImplemented
        return self.support == other.support

    def __hash__(self):
        return hash(self.support)

    def __bool__(self):
        return bool(self.support)

    def monomials(self) -> list[Monomial]:
        return sorted(self.support)

    def to_json(self) -> list[dict]:
        return [{str(k): e for k, e in m} for m in self.monomials()]

    def __repr__(self):
        if not self.support:
            return "BoolSeries(0)"
        return "BoolSeries(" + " + ".join(monomial_str(m) for m in self.monomials()) + ")"


def series_add(a: BoolSeries, b: BoolSeries) -> BoolSeries:
    return a + b


def series_mul(a: BoolSeries, b: BoolSeries) -> BoolSeries:
    return a * b


class NatPoly:
    """Polynomial with natural-number coefficients in ``τ_0, τ_1, ...``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Counter = Counter()
        for mono, coeff in items:
            if int(coeff) < 0:
                raise ValueError("coefficients must be natural numbers")
            acc[monomial(mono)] += int(coeff)
        self.terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def constant(cls, n: int) -> "NatPoly":
        return cls({(): n})

    @classmethod
    def tau(cls, k: int) -> "NatPoly":
        return cls({((k, 1),): 1})

    def __add__(self, other: "NatPoly") -> "NatPoly":
        return NatPoly(list(self.terms.items()) + list(other.terms.items()))

    def __mul__(self, other: "NatPoly") -> "NatPoly":
        return NatPoly([(monomial_mul(a, b), x * y)
                        for a, x in self.terms.items() for b, y in other.terms.items()])

    def __eq__(self, other):
        return isinstance(other, NatPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_series(self) -> BoolSeries:
        """Image under ``N[τ] -> B[[q]]``: nonzero coefficients become 1, ``τ_k -> q_k``."""
        return BoolSeries(self.terms)

    def __repr__(self):
        if not self.terms:
            return "NatPoly(0)"
        parts = []
        for m, c in sorted(self.terms.items()):
            body = monomial_str(m).replace("q", "t")
            parts.append(body if c == 1 else f"{c}*{body}" if m else str(c))
        return "NatPoly(" + " + ".join(parts) + ")"


def poly_action(p: NatPoly, s: BoolSeries) -> BoolSeries:
    return p.to_series() * s


# -- the completion -------------------------------------------------------------

class QElement:
    """Finitely many loop-free diagrams, each weighted by a nonzero series.

    The stored map is the standard presentation: keys are loop-free and no
    stored series is zero, so equality of elements is equality of maps.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Diagram, BoolSeries] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Diagram, BoolSeries] = {}
        for key, series in items:
            if not dg.is_loop_free(key):
                # Factor loops into the series so the presentation stays standard.
                series = series * BoolSeries([key.loops])
                key = dg.loop_free_part(key)
            if series:
                acc[key] = acc[key] + series if key in acc else series
        self.terms = acc

    @classmethod
    def zero(cls) -> "QElement":
        return cls()

    def components(self) -> dict[tuple, dict[Diagram, BoolSeries]]:
        """The terms grouped by hom-set signature."""
        out: dict[tuple, dict[Diagram, BoolSeries]] = {}
        for key, series in self.terms.items():
            out.setdefault(key.signature, {})[key] = series
        return out

    def __getitem__(self, key: Diagram) -> BoolSeries:
        return self.terms.get(key, BoolSeries())

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "QElement") -> "QElement":
        return q_add(self, other)

    def __eq__(self, other):
        if not isinstance(other, QElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __le__(self, other: "QElement") -> bool:
        return self + other == other

    def sorted_terms(self) -> list[tuple[Diagram, BoolSeries]]:
        return sorted(self.terms.items(), key=lambda kv: _diagram_sort_key(kv[0]))

    def to_json(self) -> list[dict]:
        from .io import diagram_to_json

        return [{"signature": {"dom": list(k.dom), "cod": list(k.cod)},
                 "key": diagram_to_json(k),
                 "monomials": s.to_json()}
                for k, s in self.sorted_terms()]

    def __repr__(self):
        body = ", ".join(f"{k!r}: {s!r}" for k, s in self.sorted_terms())
        return f"QElement({{{body}}})"


def _diagram_sort_key(f: Diagram):
    return (len(f.dom), f.dom, len(f.cod), f.cod, f.pairs)


def chi(f: Diagram) -> QElement:
    """Characteristic element: the loop-free part of ``f`` weighted by ``q^loops(f)``."""
    return QElement({dg.loop_free_part(f): BoolSeries([f.loops])})


def q_add(x: QElement, y: QElement) -> QElement:
    return QElement(list(x.terms.items()) + list(y.terms.items()))


def q_sum(family: Iterable[QElement]) -> QElement:
    items = []
    for x in family:
        items.extend(x.terms.items())
    return QElement(items)


def q_compose_mul(x: QElement, y: QElement) -> QElement:
    """Composition product; ``x`` is applied first, so terms ``φ, ψ`` give ``ψ ∘ φ``.

    Pairs whose boundaries do not meet contribute nothing.
    """
    by_dom: dict[tuple, list] = {}
    for psi, t in y.terms.items():
        by_dom.setdefault(psi.dom, []).append((psi, t))
    out = []
    for phi, s in x.terms.items():
        for psi, t in by_dom.get(phi.cod, ()):
            out.append((dg.compose(psi, phi), s * t))
    return QElement(out)


def q_monoidal_mul(x: QElement, y: QElement) -> QElement:
    """Monoidal product: terms ``φ, ψ`` give ``φ ⊗ ψ``."""
    return QElement([(dg.tensor(phi, psi), s * t)
                     for phi, s in x.terms.items() for psi, t in y.terms.items()])


def q_identity(objects: Iterable[tuple]) -> QElement:
    """Sum of ``chi(1_X)`` over ``objects``: the composition unit restricted to them."""
    return q_sum(chi(dg.identity(obj)) for obj in objects)


def q_one() -> QElement:
    """Unit of the monoidal product."""
    return chi(dg.identity(()))
