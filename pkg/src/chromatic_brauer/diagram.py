"""Morphisms of the chromatic Brauer category as colored matchings with loops.

An object is a tuple of natural-number colors; the empty tuple is the
monoidal unit.  A morphism ``dom -> cod`` is stored as a perfect matching on
the endpoints of ``dom`` and ``cod`` in which both ends of every strand carry
the same color, together with a multiset of closed loops keyed by color.
Since this is a normal form for the category, equality of :class:`Diagram`
values is equality of morphisms.

Diagrams read left to right: the domain sits on the left edge and the
codomain on the right edge, endpoints indexed bottom to top from 0.

>>> zigzag = compose(tensor(counit(0), identity((0,))),
...                  tensor(identity((0,)), unit(0)))
>>> zigzag == identity((0,))
True
>>> compose(counit(3), unit(3)) == loop(3)
True
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import BoundaryMismatchError, InvalidDiagramError

ColoredObject = tuple  # tuple[int, ...]

__all__ = [
    "Side", "Endpoint", "Diagram", "NormalForm", "ColoredObject",
    "identity", "braid", "unit", "counit", "loop", "loops_diagram",
    "compose", "tensor", "tensor_all", "reflect",
    "object_unit", "object_counit", "left_closure", "right_closure",
    "closure_loops", "equal_by_closure",
    "normal_form", "reassemble", "is_loop_free", "loop_free_part", "equals",
    "enumerate_loop_free", "permutation_diagram", "signature",
]


class Side(enum.IntEnum):
    DOM = 0
    COD = 1


class Endpoint(NamedTuple):
    side: Side
    index: int

    def __repr__(self):
        return f"{'dc'[self.side]}{self.index}"


def _as_object(colors) -> ColoredObject:
    obj = tuple(int(k) for k in colors)
    if any(k < 0 for k in obj):
        raise InvalidDiagramError(f"colors must be natural numbers, got {obj}")
    return obj


def _canonical_loops(loops) -> tuple[tuple[int, int], ...]:
    if not loops:
        return ()
    items = loops.items() if isinstance(loops, Mapping) else loops
    acc: Counter = Counter()
    for k, n in items:
        k, n = int(k), int(n)
        if k < 0 or n < 0:
            raise InvalidDiagramError(f"bad loop entry {k}: {n}")
        acc[k] += n
    return tuple(sorted((k, n) for k, n in acc.items() if n))


@dataclass(frozen=True)
class Diagram:
    """A morphism ``dom -> cod``.

    ``pairs`` may be given as any iterable of endpoint pairs (each endpoint an
    :class:`Endpoint` or a ``(side, index)`` tuple) and ``loops`` as a mapping
    from color to multiplicity; both are canonicalised on construction.
    """

    dom: ColoredObject
    cod: ColoredObject
    pairs: tuple = ()
    loops: tuple = field(default=())

    def __post_init__(self):
        dom = _as_object(self.dom)
        cod = _as_object(self.cod)
        pairs = []
        for pair in self.pairs:
            a, b = (Endpoint(Side(s), int(i)) for s, i in pair)
            pairs.append((a, b) if a < b else (b, a))
        pairs.sort()
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "loops", _canonical_loops(self.loops))
        self._validate()

    def _validate(self):
        seen = set()
        for a, b in self.pairs:
            if a == b:
                raise InvalidDiagramError(f"endpoint {a!r} paired with itself")
            for p in (a, b):
                bound = self.dom if p.side == Side.DOM else self.cod
                if not 0 <= p.index < len(bound):
                    raise InvalidDiagramError(f"endpoint {p!r} out of range")
                if p in seen:
                    raise InvalidDiagramError(f"endpoint {p!r} used twice")
                seen.add(p)
            if self.color(a) != self.color(b):
                raise InvalidDiagramError(
                    f"pair ({a!r}, {b!r}) joins colors {self.color(a)} and {self.color(b)}")
        if len(seen) != len(self.dom) + len(self.cod):
            raise InvalidDiagramError("pairs do not cover every endpoint")

    def color(self, p: Endpoint) -> int:
        return (self.dom if p.side == Side.DOM else self.cod)[p.index]

    @property
    def loop_counts(self) -> dict[int, int]:
        return dict(self.loops)

    @property
    def signature(self) -> tuple[ColoredObject, ColoredObject]:
        return self.dom, self.cod

    def through(self) -> list[tuple[int, int]]:
        """``(dom index, cod index)`` for every through strand."""
        return [(a.index, b.index) for a, b in self.pairs
                if a.side == Side.DOM and b.side == Side.COD]

    def cups(self) -> list[tuple[int, int]]:
        """Strands with both ends in the domain."""
        return [(a.index, b.index) for a, b in self.pairs
                if a.side == b.side == Side.DOM]

    def caps(self) -> list[tuple[int, int]]:
        """Strands with both ends in the codomain."""
        return [(a.index, b.index) for a, b in self.pairs
                if a.side == b.side == Side.COD]

    def partners(self) -> list[int]:
        """Partner table on global indices: dom ``i`` is ``i``, cod ``j`` is ``m + j``."""
        m = len(self.dom)
        glob = [0] * (m + len(self.cod))
        for a, b in self.pairs:
            ga = a.index + (m if a.side else 0)
            gb = b.index + (m if b.side else 0)
            glob[ga], glob[gb] = gb, ga
        return glob

    def __repr__(self):
        pairs = " ".join(f"{a!r}-{b!r}" for a, b in self.pairs)
        loops = f" loops={dict(self.loops)}" if self.loops else ""
        return f"Diagram({list(self.dom)} -> {list(self.cod)}: {pairs}{loops})"


def _from_partners(dom, cod, glob, loops=()) -> Diagram:
    m = len(dom)
    pairs = []
    for g, h in enumerate(glob):
        if g < h:
            pairs.append((_endpoint(g, m), _endpoint(h, m)))
    return Diagram(dom, cod, pairs, loops)


def _endpoint(g: int, m: int) -> Endpoint:
    return Endpoint(Side.DOM, g) if g < m else Endpoint(Side.COD, g - m)


def signature(f: Diagram) -> tuple[ColoredObject, ColoredObject]:
    return f.dom, f.cod


# -- generators ---------------------------------------------------------------

def identity(obj: Sequence[int]) -> Diagram:
    obj = _as_object(obj)
    return Diagram(obj, obj, [((Side.DOM, i), (Side.COD, i)) for i in range(len(obj))])


def braid(k: int, l: int) -> Diagram:
    return Diagram((k, l), (l, k), [((Side.DOM, 0), (Side.COD, 1)),
                                    ((Side.DOM, 1), (Side.COD, 0))])


def unit(k: int) -> Diagram:
    """The cup ``I -> (k, k)``."""
    return Diagram((), (k, k), [((Side.COD, 0), (Side.COD, 1))])


def counit(k: int) -> Diagram:
    """The cap ``(k, k) -> I``."""
    return Diagram((k, k), (), [((Side.DOM, 0), (Side.DOM, 1))])


def loop(k: int) -> Diagram:
    return Diagram((), (), (), {k: 1})


def loops_diagram(loops) -> Diagram:
    """The endomorphism of ``I`` made of the given loop multiset."""
    return Diagram((), (), (), loops)


def permutation_diagram(obj: Sequence[int], perm: Sequence[int]) -> Diagram:
    """Strand from domain position ``i`` to codomain position ``perm[i]``."""
    obj = _as_object(obj)
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(len(obj))):
        raise InvalidDiagramError(f"{perm} is not a permutation of {len(obj)} positions")
    cod = [0] * len(obj)
    for i, p in enumerate(perm):
        cod[p] = obj[i]
    return Diagram(obj, tuple(cod), [((Side.DOM, i), (Side.COD, p)) for i, p in enumerate(perm)])


# -- composition and tensor -----------------------------------------------------

def compose(g: Diagram, f: Diagram) -> Diagram:
    """``g ∘ f``: first ``f``, then ``g``.

    Strands are joined by walking through the shared boundary; every closed
    cycle left over on that boundary becomes a loop of its color.
    """
    if f.cod != g.dom:
        raise BoundaryMismatchError(
            f"cannot compose: codomain {list(f.cod)} != domain {list(g.dom)}")
    m, n, p = len(f.dom), len(f.cod), len(g.cod)
    fp, gp = f.partners(), g.partners()
    seen = [False] * n
    # Outer endpoints get global indices 0..m-1 (f's domain), m..m+p-1 (g's codomain).
    out = [-1] * (m + p)

    def walk_from_f(cur):
        while cur >= m:
            j = cur - m
            seen[j] = True
            nxt = gp[j]
            if nxt >= n:
                return m + nxt - n
            seen[nxt] = True
            cur = fp[m + nxt]
        return cur

    def walk_from_g(cur):
        while cur < n:
            seen[cur] = True
            nxt = fp[m + cur]
            if nxt < m:
                return nxt
            j = nxt - m
            seen[j] = True
            cur = gp[j]
        return m + cur - n

    for i in range(m):
        if out[i] < 0:
            end = walk_from_f(fp[i])
            out[i], out[end] = end, i
    for k in range(p):
        if out[m + k] < 0:
            end = walk_from_g(gp[n + k])
            out[m + k], out[end] = end, m + k

    created: Counter = Counter()
    for start in range(n):
        if seen[start]:
            continue
        color = f.cod[start]
        j = start
        while True:
            seen[j] = True
            j2 = gp[j]
            seen[j2] = True
            if f.cod[j] != color or f.cod[j2] != color:
                raise AssertionError("closed component mixes colors")
            j = fp[m + j2] - m
            if j == start:
                break
        created[color] += 1

    loops = Counter(dict(f.loops))
    loops.update(dict(g.loops))
    loops.update(created)
    return _from_partners(f.dom, g.cod, out, loops)


def tensor(f: Diagram, g: Diagram) -> Diagram:
    """``f ⊗ g``: ``g`` stacked above ``f``."""
    mf, nf = len(f.dom), len(f.cod)
    shift = {Side.DOM: mf, Side.COD: nf}
    pairs = list(f.pairs)
    for a, b in g.pairs:
        pairs.append((Endpoint(a.side, a.index + shift[a.side]),
                      Endpoint(b.side, b.index + shift[b.side])))
    loops = Counter(dict(f.loops))
    loops.update(dict(g.loops))
    return Diagram(f.dom + g.dom, f.cod + g.cod, pairs, loops)


def tensor_all(diagrams: Iterable[Diagram]) -> Diagram:
    result = identity(())
    for d in diagrams:
        result = tensor(result, d)
    return result


def reflect(f: Diagram) -> Diagram:
    """Mirror image across a vertical axis; inverts permutation diagrams."""
    flip = lambda p: Endpoint(Side(1 - p.side), p.index)
    return Diagram(f.cod, f.dom, [(flip(a), flip(b)) for a, b in f.pairs], f.loops)


# -- closures -------------------------------------------------------------------

def _nested_unit(obj: ColoredObject) -> Diagram:
    """``I -> obj ⊗ reversed(obj)``, built as ``(1 ⊗ i_rest ⊗ 1) ∘ i_first``."""
    if not obj:
        return identity(())
    head, rest = obj[0], obj[1:]
    inner = tensor_all([identity((head,)), _nested_unit(rest), identity((head,))])
    return compose(inner, unit(head))


def object_unit(obj: Sequence[int]) -> Diagram:
    """``I -> obj ⊗ obj`` pairing position ``j`` with ``m + j``.

    The nested unit lands in ``obj ⊗ reversed(obj)``; a reversal permutation
    on the second factor brings it back to ``obj ⊗ obj``.
    """
    obj = _as_object(obj)
    m = len(obj)
    rev = tuple(reversed(obj))
    flip = permutation_diagram(rev, [m - 1 - i for i in range(m)])
    return compose(tensor(identity(obj), flip), _nested_unit(obj))


def object_counit(obj: Sequence[int]) -> Diagram:
    """``obj ⊗ obj -> I``, the mirror image of :func:`object_unit`."""
    return reflect(object_unit(obj))


def left_closure(f: Diagram) -> Diagram:
    """``e_dom ∘ (1_dom ⊗ reflect(f))``, a morphism ``dom ⊗ cod -> I``."""
    return compose(object_counit(f.dom), tensor(identity(f.dom), reflect(f)))


def right_closure(f: Diagram) -> Diagram:
    """``(1_dom ⊗ f) ∘ i_dom``, a morphism ``I -> dom ⊗ cod``."""
    return compose(tensor(identity(f.dom), f), object_unit(f.dom))


def closure_loops(f: Diagram) -> dict[int, int]:
    """The loop multiset ``k -> (|dom^-1(k)| + |cod^-1(k)|) / 2``."""
    counts = Counter(f.dom) + Counter(f.cod)
    return {k: n // 2 for k, n in sorted(counts.items())}


def equal_by_closure(phi: Diagram, psi: Diagram) -> bool:
    """Decide equality of loop-free morphisms by closing them against each other.

    Returns ``False`` straight away when the signatures differ.
    """
    if phi.signature != psi.signature:
        return False
    closed = compose(left_closure(phi), right_closure(psi))
    return closed == loops_diagram(closure_loops(phi))


# -- normal form ----------------------------------------------------------------

@dataclass(frozen=True)
class NormalForm:
    """``loops ⊗ (beta ∘ core ∘ alpha)`` with a monotone core.

    ``alpha[i]`` is where domain position ``i`` lands in the sorted domain;
    ``beta[j]`` is the codomain position that sorted position ``j`` is sent to.
    For each color ``k`` (ascending) the core carries ``through[k]`` straight
    strands, then ``cups[k]`` caps on the domain side and ``caps[k]`` cups on
    the codomain side, in that order.
    """

    dom: ColoredObject
    cod: ColoredObject
    loops: dict
    alpha: tuple
    beta: tuple
    cups: dict
    caps: dict
    through: dict

    def sorted_dom(self) -> ColoredObject:
        return tuple(sorted(self.dom))

    def sorted_cod(self) -> ColoredObject:
        return tuple(sorted(self.cod))

    def core(self) -> Diagram:
        blocks = []
        for k in sorted(set(self.dom) | set(self.cod)):
            blocks.append(identity((k,) * self.through.get(k, 0)))
            blocks.extend(counit(k) for _ in range(self.cups.get(k, 0)))
            blocks.extend(unit(k) for _ in range(self.caps.get(k, 0)))
        return tensor_all(blocks)


def normal_form(f: Diagram) -> NormalForm:
    colors = sorted(set(f.dom) | set(f.cod))
    through = sorted(f.through())
    cups = sorted(f.cups())
    caps = sorted(f.caps())
    dom_order, cod_order = [], []
    n_through, n_cups, n_caps = {}, {}, {}
    for k in colors:
        t = [(a, b) for a, b in through if f.dom[a] == k]
        cu = [(a, b) for a, b in cups if f.dom[a] == k]
        ca = [(a, b) for a, b in caps if f.cod[a] == k]
        dom_order += [a for a, _ in t] + [x for pair in cu for x in pair]
        cod_order += [b for _, b in t] + [x for pair in ca for x in pair]
        n_through[k], n_cups[k], n_caps[k] = len(t), len(cu), len(ca)
    alpha = [0] * len(f.dom)
    for new, old in enumerate(dom_order):
        alpha[old] = new
    strip = lambda d: {k: v for k, v in d.items() if v}
    return NormalForm(
        dom=f.dom, cod=f.cod, loops=dict(f.loops),
        alpha=tuple(alpha), beta=tuple(cod_order),
        cups=strip(n_cups), caps=strip(n_caps), through=strip(n_through),
    )


def reassemble(nf: NormalForm) -> Diagram:
    alpha = permutation_diagram(nf.dom, nf.alpha)
    beta = permutation_diagram(nf.sorted_cod(), nf.beta)
    body = compose(beta, compose(nf.core(), alpha))
    return tensor(loops_diagram(nf.loops), body)


def is_loop_free(f: Diagram) -> bool:
    return not f.loops


def loop_free_part(f: Diagram) -> Diagram:
    return Diagram(f.dom, f.cod, f.pairs)


def equals(f: Diagram, g: Diagram) -> bool:
    return f == g


# -- enumeration ----------------------------------------------------------------

def _matchings(colors: list[int], free: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not free:
        yield []
        return
    first, rest = free[0], free[1:]
    for idx, other in enumerate(rest):
        if colors[other] != colors[first]:
            continue
        remaining = rest[:idx] + rest[idx + 1:]
        for tail in _matchings(colors, remaining):
            yield [(first, other)] + tail


def enumerate_loop_free(dom: Sequence[int], cod: Sequence[int]) -> list[Diagram]:
    """Every loop-free morphism ``dom -> cod`` in lexicographic pair order."""
    dom, cod = _as_object(dom), _as_object(cod)
    counts = Counter(dom) + Counter(cod)
    if any(n % 2 for n in counts.values()):
        return []
    colors = list(dom + cod)
    result = []
    for matching in _matchings(colors, list(range(len(colors)))):
        glob = [0] * len(colors)
        for a, b in matching:
            glob[a], glob[b] = b, a
        result.append(_from_partners(dom, cod, glob))
    return result
