"""Hypothesis strategies for diagrams and semiring elements."""

from __future__ import annotations

from hypothesis import strategies as st

from chromatic_brauer.diagram import Diagram, Endpoint, Side
from chromatic_brauer.semiring import BoolSeries, QElement

from oracles import random_word

COLORS = st.integers(0, 2)


def objects(max_len=3, colors=COLORS):
    return st.lists(colors, max_size=max_len).map(tuple)


@st.composite
def diagrams(draw, max_side=3, colors=COLORS, max_loops=2, dom=None, cod=None):
    """A uniformly shuffled color-consistent matching between two objects."""
    dom = tuple(draw(objects(max_side, colors))) if dom is None else tuple(dom)
    cod = tuple(draw(objects(max_side, colors))) if cod is None else tuple(cod)
    for k in sorted(set(dom) | set(cod)):
        if (dom.count(k) + cod.count(k)) % 2:
            cod = cod + (k,)
    rng = draw(st.randoms(use_true_random=False))
    pairs = []
    for k in sorted(set(dom) | set(cod)):
        ends = [Endpoint(Side.DOM, i) for i, c in enumerate(dom) if c == k]
        ends += [Endpoint(Side.COD, j) for j, c in enumerate(cod) if c == k]
        rng.shuffle(ends)
        pairs += [(ends[i], ends[i + 1]) for i in range(0, len(ends), 2)]
    loops = draw(st.dictionaries(colors, st.integers(0, max_loops), max_size=2))
    return Diagram(dom, cod, pairs, loops)


def loop_free_diagrams(**kw):
    return diagrams(max_loops=0, **kw)


def words(max_slices=8, max_strands=4, palette=(0, 1)):
    return st.randoms(use_true_random=False).map(
        lambda rng: random_word(rng, max_slices, max_strands, palette))


monomials = st.dictionaries(st.integers(0, 2), st.integers(0, 3), max_size=3)
bool_series = st.lists(monomials, max_size=4).map(lambda ms: BoolSeries.of(*ms))


@st.composite
def q_elements(draw, max_terms=3, max_side=2, colors=st.integers(0, 1)):
    terms = draw(st.lists(st.tuples(loop_free_diagrams(max_side=max_side, colors=colors),
                                    bool_series), max_size=max_terms))
    return QElement(terms)


def composable_pair(max_side=2, colors=st.integers(0, 1)):
    """Two diagrams ``f, g`` with ``cod f == dom g``."""
    @st.composite
    def build(draw):
        f = draw(diagrams(max_side=max_side, colors=colors))
        g = draw(diagrams(max_side=max_side, colors=colors, dom=f.cod))
        return f, g
    return build()

