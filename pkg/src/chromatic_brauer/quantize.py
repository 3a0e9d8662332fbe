"""State sums over finite sets of combinatorial cobordism presentations.

A :class:`CobordismWord` is a generator word read as a cobordism between two
colored boundaries; its action is the diagram the word folds to.  A
:class:`FieldSet` is a finite family of such words sharing one boundary
condition, and its state sum is the idempotent sum of the characteristic
elements of their actions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import Diagram
from .errors import BoundaryMismatchError, IncompatibleLayersError, ParseError
from .represent import GeneratorWord, Slice, fold_word
from .semiring import QElement, chi, q_sum


@dataclass(frozen=True)
class CobordismWord:
    in_boundary: tuple
    out_boundary: tuple
    slices: GeneratorWord

    def __post_init__(self):
        object.__setattr__(self, "in_boundary", tuple(int(k) for k in self.in_boundary))
        object.__setattr__(self, "out_boundary", tuple(int(k) for k in self.out_boundary))
        if self.slices.dom != self.in_boundary:
            raise IncompatibleLayersError(
                f"word starts at {list(self.slices.dom)}, in-boundary is {list(self.in_boundary)}")
        if self.slices.cod != self.out_boundary:
            raise IncompatibleLayersError(
                f"word ends at {list(self.slices.cod)}, out-boundary is {list(self.out_boundary)}")

    @classmethod
    def from_slices(cls, in_boundary: Sequence[int], slices: Iterable[Slice]) -> "CobordismWord":
        word = GeneratorWord(tuple(in_boundary), tuple(slices))
        return cls(word.dom, word.cod, word)

    @classmethod
    def empty(cls, boundary: Sequence[int]) -> "CobordismWord":
        return cls.from_slices(boundary, ())


def action(w: CobordismWord) -> Diagram:
    return fold_word(w.slices)


def glue(w1: CobordismWord, w2: CobordismWord) -> CobordismWord:
    """``w1`` followed by ``w2`` along their common boundary."""
    if w1.out_boundary != w2.in_boundary:
        raise BoundaryMismatchError(
            f"cannot glue: {list(w1.out_boundary)} != {list(w2.in_boundary)}")
    return CobordismWord(w1.in_boundary, w2.out_boundary, w1.slices.then(w2.slices))


def stack(w1: CobordismWord, w2: CobordismWord) -> CobordismWord:
    """Disjoint union with ``w2`` placed above ``w1``.

    ``w1``'s slices run first with ``w2``'s strands idle above them, then
    ``w2``'s slices run shifted past ``w1``'s out-boundary.
    """
    shift = len(w1.out_boundary)
    moved = [Slice(s.event, s.colors, s.pos + shift) for s in w2.slices.slices]
    return CobordismWord.from_slices(w1.in_boundary + w2.in_boundary,
                                     list(w1.slices.slices) + moved)


@dataclass(frozen=True)
class FieldSet:
    boundary_condition: tuple
    fields: tuple = ()

    def __post_init__(self):
        bc = tuple(tuple(int(k) for k in side) for side in self.boundary_condition)
        object.__setattr__(self, "boundary_condition", bc)
        object.__setattr__(self, "fields", tuple(self.fields))
        for w in self.fields:
            if (w.in_boundary, w.out_boundary) != bc:
                raise BoundaryMismatchError(
                    f"field {list(w.in_boundary)} -> {list(w.out_boundary)} does not match "
                    f"boundary condition {list(bc[0])} -> {list(bc[1])}")

    @classmethod
    def of(cls, in_boundary, out_boundary, fields=()) -> "FieldSet":
        return cls((tuple(in_boundary), tuple(out_boundary)), tuple(fields))


def state_sum(fs: FieldSet) -> QElement:
    return q_sum(chi(action(w)) for w in fs.fields)


def glue_field_sets(a: FieldSet, b: FieldSet) -> FieldSet:
    """All gluings ``glue(x, y)`` with ``x`` from ``a`` and ``y`` from ``b``."""
    if a.boundary_condition[1] != b.boundary_condition[0]:
        raise BoundaryMismatchError("field sets do not share a boundary")
    return FieldSet((a.boundary_condition[0], b.boundary_condition[1]),
                    tuple(glue(x, y) for x in a.fields for y in b.fields))


def stack_field_sets(a: FieldSet, b: FieldSet) -> FieldSet:
    (ai, ao), (bi, bo) = a.boundary_condition, b.boundary_condition
    return FieldSet((ai + bi, ao + bo), tuple(stack(x, y) for x in a.fields for y in b.fields))


# -- field file -------------------------------------------------------------------

def slice_from_json(data) -> Slice:
    try:
        return Slice(data["event"], tuple(data.get("colors", ())), int(data.get("pos", 0)))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, IncompatibleLayersError):
            raise
        raise ParseError(f"malformed slice {data!r}") from None


def field_set_from_json(data) -> FieldSet:
    try:
        inb, outb, raw = tuple(data["in"]), tuple(data["out"]), data["fields"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed field file: missing {exc}") from None
    words = [CobordismWord.from_slices(inb, [slice_from_json(s) for s in field]) for field in raw]
    return FieldSet((inb, outb), tuple(words))


def field_set_to_json(fs: FieldSet) -> dict:
    inb, outb = fs.boundary_condition
    return {"in": list(inb), "out": list(outb),
            "fields": [w.slices.to_json() for w in fs.fields]}


__all__ = [
    "CobordismWord", "FieldSet", "action", "glue", "stack", "state_sum",
    "glue_field_sets", "stack_field_sets", "field_set_from_json", "field_set_to_json",
    "slice_from_json",
]
