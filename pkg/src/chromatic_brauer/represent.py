"""Linear representations of the chromatic Brauer category over the rationals.

A representation assigns to each color ``k`` a symmetric invertible matrix
``X_k`` (the counit, a pairing on ``V_k``); the unit is the copairing given by
``X_k^-1``.  Morphisms are evaluated in two independent ways:

* :func:`eval_diagram` contracts directly over the matching of a
  :class:`~chromatic_brauer.diagram.Diagram`;
* :func:`eval_word` multiplies Kronecker-expanded generator matrices slice by
  slice along a :class:`GeneratorWord`.

Multi-indices are flattened row-major, first tensor factor most significant,
so ``eval(f ⊗ g) == kron(eval(f), eval(g))`` holds on the nose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import diagram as dg
from .diagram import Diagram
from .errors import (
    IncompatibleLayersError,
    NotLoopFreeError,
    NotSquareError,
    NotSymmetricError,
    SingularMatrixError,
    UnknownColorError,
    ZeroDimensionError,
)

_INT64_SAFE = 2 ** 62


def to_fraction(value) -> Fraction:
    """Parse ``int``, ``Fraction`` or a ``"p/q"`` string."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    return Fraction(value)


class RationalMatrix:
    """Dense exact matrix stored as integers over one positive denominator.

    Entries are ``num[i, j] / den`` with ``gcd(den, *num) == 1``, which keeps
    the representation canonical so ``==`` and ``hash`` are structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, entries: Iterable[Iterable]):
        rows = [[to_fraction(x) for x in row] for row in entries]
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        ncols = widths.pop() if widths else 0
        den = math.lcm(*(x.denominator for r in rows for x in r)) if ncols else 1
        num = np.empty((len(rows), ncols), dtype=object)
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                num[i, j] = x.numerator * (den // x.denominator)
        self._set(num, den)

    @classmethod
    def scaled(cls, num: np.ndarray, den: int = 1) -> "RationalMatrix":
        """Build from an integer array and a common denominator."""
        self = object.__new__(cls)
        self._set(np.asarray(num, dtype=object), int(den))
        return self

    def _set(self, num, den):
        if den <= 0:
            raise ValueError("denominator must be positive")
        if num.ndim != 2:
            raise ValueError("matrix must be two-dimensional")
        g = math.gcd(den, *num.ravel().tolist())
        if g > 1:
            num = num // g
            den //= g
        self.num = num
        self.den = den

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.scaled(_int_eye(n))

    @classmethod
    def scalar(cls, value) -> "RationalMatrix":
        value = to_fraction(value)
        return cls.scaled(np.array([[value.numerator]], dtype=object), value.denominator)

    @property
    def rows(self) -> int:
        return self.num.shape[0]

    @property
    def cols(self) -> int:
        return self.num.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    @property
    def entries(self) -> list[list[Fraction]]:
        return [[Fraction(int(x), self.den) for x in row] for row in self.num]

    def __getitem__(self, idx) -> Fraction:
        i, j = idx
        return Fraction(int(self.num[i, j]), self.den)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.den == other.den
                and bool(np.array_equal(self.num, other.num)))

    def __hash__(self):
        return hash((self.shape, self.den, tuple(self.num.ravel().tolist())))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return RationalMatrix.scaled(_int_matmul(self.num, other.num), self.den * other.den)

    def __mul__(self, scalar) -> "RationalMatrix":
        s = to_fraction(scalar)
        return RationalMatrix.scaled(self.num * s.numerator, self.den * s.denominator)

    __rmul__ = __mul__

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix.scaled(self.num * other.den + other.num * self.den,
                                     self.den * other.den)

    def __neg__(self):
        return RationalMatrix.scaled(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.scaled(self.num.T.copy(), self.den)

    T = property(transpose)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise NotSquareError("trace of a non-square matrix")
        return Fraction(int(sum(self.num.diagonal().tolist(), 0)), self.den)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and bool(np.array_equal(self.num, self.num.T))

    def determinant(self) -> Fraction:
        if not self.is_square():
            raise NotSquareError(f"{self.rows}x{self.cols} matrix has no determinant")
        a = [row[:] for row in self.entries]
        n, det = len(a), Fraction(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det *= a[c][c]
            for r in range(c + 1, n):
                factor = a[r][c] / a[c][c]
                if factor:
                    a[r] = [x - factor * y for x, y in zip(a[r], a[c])]
        return det

    def inverse(self) -> "RationalMatrix":
        """Gauss-Jordan inverse over the rationals."""
        if not self.is_square():
            raise NotSquareError(f"{self.rows}x{self.cols} matrix is not square")
        n = self.rows
        a = [row + [Fraction(int(i == j)) for j in range(n)]
             for i, row in enumerate(self.entries)]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            a[c], a[piv] = a[piv], a[c]
            p = a[c][c]
            a[c] = [x / p for x in a[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    factor = a[r][c]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[c])]
        return RationalMatrix([row[n:] for row in a])

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[str(x) for x in row] for row in self.entries]}

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return RationalMatrix.scaled(np.kron(a.num, b.num), a.den * b.den)


def _int_eye(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


def _max_abs(a: np.ndarray) -> int:
    return max((abs(int(x)) for x in a.ravel().tolist()), default=0)


def _int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # int64 when the product provably cannot overflow, Python ints otherwise.
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    if _max_abs(a) * _max_abs(b) * a.shape[1] < _INT64_SAFE:
        out = a.astype(np.int64) @ b.astype(np.int64)
        return out.astype(object)
    return a.dot(b)


# -- duality structures ---------------------------------------------------------

@dataclass(frozen=True)
class DualityStructure:
    """Counit matrix ``X`` and unit matrix ``X^-1`` on a ``dim``-dimensional space.

    Construct through :func:`duality_from_matrix`, which checks the
    invariants; the raw constructor does not, so that tests can build broken
    structures on purpose.
    """

    dim: int
    counit_matrix: RationalMatrix
    unit_matrix: RationalMatrix

    def counit_row(self) -> RationalMatrix:
        """``vec(X)^T`` as a ``1 x d^2`` matrix."""
        return RationalMatrix.scaled(self.counit_matrix.num.reshape(1, -1), self.counit_matrix.den)

    def unit_column(self) -> RationalMatrix:
        """``vec(X^-1)`` as a ``d^2 x 1`` matrix."""
        return RationalMatrix.scaled(self.unit_matrix.num.reshape(-1, 1), self.unit_matrix.den)

    def zigzag_holds(self) -> bool:
        d = self.dim
        eye = RationalMatrix.identity(d)
        left = kron(self.counit_row(), eye) @ kron(eye, self.unit_column())
        return left == eye

    def loop_value(self) -> Fraction:
        return (self.counit_row() @ self.unit_column())[0, 0]


def duality_from_matrix(x) -> DualityStructure:
    if not isinstance(x, RationalMatrix):
        x = RationalMatrix(x)
    if not x.is_square() or x.rows == 0:
        raise NotSquareError(f"counit matrix must be square and non-empty, got {x.rows}x{x.cols}")
    if not x.is_symmetric():
        raise NotSymmetricError("counit matrix must be symmetric")
    if x.determinant() == 0:
        raise SingularMatrixError("counit matrix is singular")
    ds = DualityStructure(x.rows, x, x.inverse())
    assert ds.zigzag_holds()
    return ds


@dataclass(frozen=True)
class Representation:
    """Duality structures keyed by color."""

    colors: Mapping[int, DualityStructure]

    def __post_init__(self):
        object.__setattr__(self, "colors", {int(k): v for k, v in dict(self.colors).items()})

    @classmethod
    def from_matrices(cls, matrices: Mapping[int, object]) -> "Representation":
        return cls({k: duality_from_matrix(x) for k, x in matrices.items()})

    @classmethod
    def standard(cls, dims: Mapping[int, int] | Sequence[int]) -> "Representation":
        """Identity counit matrices with the given dimensions."""
        if not isinstance(dims, Mapping):
            dims = dict(enumerate(dims))
        return cls.from_matrices({k: RationalMatrix.identity(d) for k, d in dims.items()})

    def __getitem__(self, k: int) -> DualityStructure:
        try:
            return self.colors[k]
        except KeyError:
            raise UnknownColorError(f"representation has no color {k}") from None

    def dim(self, k: int) -> int:
        return self[k].dim

    def dims(self, obj: Sequence[int]) -> list[int]:
        return [self.dim(k) for k in obj]

    def size(self, obj: Sequence[int]) -> int:
        return math.prod(self.dims(obj))


# -- direct evaluation ----------------------------------------------------------

def _place(mat: np.ndarray, ax1: int, ax2: int, ndim: int) -> np.ndarray:
    if ax1 > ax2:
        ax1, ax2, mat = ax2, ax1, mat.T
    shape = [1] * ndim
    shape[ax1], shape[ax2] = mat.shape
    return mat.reshape(shape)


def eval_diagram(rep: Representation, f: Diagram) -> RationalMatrix:
    """Evaluate ``f`` by contracting over its matching.

    The entry at output multi-index ``j`` and input multi-index ``i`` is the
    product of ``δ(i_a, j_b)`` over through strands, ``X[i_a, i_b]`` over
    domain-side strands, ``X^-1[j_a, j_b]`` over codomain-side strands, and
    ``d_k`` per loop of color ``k``.
    """
    out_dims, in_dims = rep.dims(f.cod), rep.dims(f.dom)
    n_out = len(out_dims)
    ndim = n_out + len(in_dims)
    tensor = np.ones(tuple(out_dims + in_dims), dtype=object)
    den = 1
    for (i, j) in f.through():
        d = in_dims[i]
        tensor = tensor * _place(_int_eye(d), j, n_out + i, ndim)
    for (a, b) in f.cups():
        x = rep[f.dom[a]].counit_matrix
        tensor = tensor * _place(x.num, n_out + a, n_out + b, ndim)
        den *= x.den
    for (a, b) in f.caps():
        y = rep[f.cod[a]].unit_matrix
        tensor = tensor * _place(y.num, a, b, ndim)
        den *= y.den
    scale = Fraction(1)
    for k, n in f.loops:
        scale *= rep[k].loop_value() ** n
    num = tensor.reshape(math.prod(out_dims), math.prod(in_dims))
    return RationalMatrix.scaled(num * scale.numerator, den * scale.denominator)


def trace(rep: Representation, f: Diagram) -> Fraction:
    """Trace of ``eval_diagram(rep, f)`` for an endomorphism ``f``.

    Sums the same entry formula over the diagonal only, so the full
    ``N x N`` matrix is never built.
    """
    if f.dom != f.cod:
        raise NotSquareError("trace needs an endomorphism")
    dims = rep.dims(f.dom)
    n = len(dims)
    tensor = np.ones(tuple(dims), dtype=object)
    den = 1
    for (i, j) in f.through():
        if i != j:
            tensor = tensor * _place(_int_eye(dims[i]), i, j, n)
    for (a, b) in f.cups():
        x = rep[f.dom[a]].counit_matrix
        tensor = tensor * _place(x.num, a, b, n)
        den *= x.den
    for (a, b) in f.caps():
        y = rep[f.cod[a]].unit_matrix
        tensor = tensor * _place(y.num, a, b, n)
        den *= y.den
    scale = Fraction(1)
    for k, count in f.loops:
        scale *= rep[k].loop_value() ** count
    total = int(sum(tensor.ravel().tolist(), 0))
    return Fraction(total, den) * scale


# -- generator words --------------------------------------------------------------

EVENTS = ("id", "braid", "unit", "counit")


@dataclass(frozen=True)
class Slice:
    """One generator applied at ``pos`` with identities around it.

    ``id`` leaves the boundary unchanged (its ``colors``, if any, must match
    the strands starting at ``pos``); ``braid`` takes ``colors=(k, l)``;
    ``unit`` and ``counit`` take ``colors=(k,)``.
    """

    event: str
    colors: tuple = ()
    pos: int = 0

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(k) for k in self.colors))
        arity = {"id": None, "braid": 2, "unit": 1, "counit": 1}
        if self.event not in arity:
            raise IncompatibleLayersError(f"unknown event {self.event!r}")
        want = arity[self.event]
        if want is not None and len(self.colors) != want:
            raise IncompatibleLayersError(
                f"{self.event} takes {want} color(s), got {list(self.colors)}")
        if self.pos < 0:
            raise IncompatibleLayersError("negative slice position")

    def generator(self) -> Diagram:
        if self.event == "braid":
            return dg.braid(*self.colors)
        if self.event == "unit":
            return dg.unit(self.colors[0])
        if self.event == "counit":
            return dg.counit(self.colors[0])
        return dg.identity(self.colors)

    def apply(self, boundary: tuple) -> tuple[tuple, tuple, tuple]:
        """Split ``boundary`` into ``(left, consumed, right)`` after checking fit."""
        gen = self.generator()
        width = len(gen.dom)
        if self.pos + width > len(boundary):
            raise IncompatibleLayersError(
                f"{self.event} at position {self.pos} does not fit boundary {list(boundary)}")
        left, mid, right = boundary[:self.pos], boundary[self.pos:self.pos + width], boundary[self.pos + width:]
        if mid != gen.dom:
            raise IncompatibleLayersError(
                f"{self.event}{list(self.colors)} at position {self.pos} expects "
                f"{list(gen.dom)}, boundary has {list(mid)}")
        return left, mid, right

    def output(self, boundary: tuple) -> tuple:
        left, _, right = self.apply(boundary)
        return left + self.generator().cod + right

    def to_json(self) -> dict:
        return {"event": self.event, "colors": list(self.colors), "pos": self.pos}


@dataclass(frozen=True)
class GeneratorWord:
    """A morphism presented as a sequence of slices starting at ``dom``."""

    dom: tuple
    slices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "dom", tuple(int(k) for k in self.dom))
        object.__setattr__(self, "slices", tuple(self.slices))
        self.boundaries()

    def boundaries(self) -> list[tuple]:
        """The boundary object before the first slice and after each slice."""
        out = [self.dom]
        for s in self.slices:
            out.append(s.output(out[-1]))
        return out

    @property
    def cod(self) -> tuple:
        return self.boundaries()[-1]

    def then(self, other: "GeneratorWord") -> "GeneratorWord":
        """Concatenate: ``self`` first, then ``other``."""
        if other.dom != self.cod:
            raise IncompatibleLayersError(
                f"word ends at {list(self.cod)} but next starts at {list(other.dom)}")
        return GeneratorWord(self.dom, self.slices + other.slices)

    def to_json(self) -> list:
        return [s.to_json() for s in self.slices]


def fold_word(w: GeneratorWord) -> Diagram:
    """Interpret a word as a diagram by composing its slices."""
    acc = dg.identity(w.dom)
    boundary = w.dom
    for s in w.slices:
        left, _, right = s.apply(boundary)
        layer = dg.tensor_all([dg.identity(left), s.generator(), dg.identity(right)])
        acc = dg.compose(layer, acc)
        boundary = layer.cod
    return acc


def generator_matrix(rep: Representation, s: Slice) -> RationalMatrix:
    k = s.colors
    if s.event == "unit":
        return rep[k[0]].unit_column()
    if s.event == "counit":
        return rep[k[0]].counit_row()
    if s.event == "braid":
        dk, dl = rep.dim(k[0]), rep.dim(k[1])
        num = np.zeros((dk * dl, dk * dl), dtype=object)
        for i in range(dk):
            for j in range(dl):
                num[j * dk + i, i * dl + j] = 1
        return RationalMatrix.scaled(num)
    return RationalMatrix.identity(rep.size(k))


def eval_word(rep: Representation, w: GeneratorWord) -> RationalMatrix:
    """Evaluate a word as a product of ``1 ⊗ G ⊗ 1`` layer matrices."""
    acc = RationalMatrix.identity(rep.size(w.dom))
    boundary = w.dom
    for s in w.slices:
        left, _, right = s.apply(boundary)
        layer = kron(kron(RationalMatrix.identity(rep.size(left)), generator_matrix(rep, s)),
                     RationalMatrix.identity(rep.size(right)))
        acc = layer @ acc
        boundary = s.output(boundary)
    return acc


# -- relations ------------------------------------------------------------------

@dataclass(frozen=True)
class RelationCheck:
    name: str
    colors: tuple
    diagram_equal: bool
    matrix_equal: bool

    @property
    def passed(self) -> bool:
        return self.diagram_equal and self.matrix_equal

    def to_json(self) -> dict:
        return {"name": self.name, "colors": list(self.colors),
                "diagram": self.diagram_equal, "matrix": self.matrix_equal}


def relation_words(name: str, colors: Sequence[int]) -> tuple[GeneratorWord, GeneratorWord]:
    """Both sides of a generating relation as words, left side first."""
    W, S = GeneratorWord, Slice
    if name == "A1":
        (k,) = colors
        return (W((k,), (S("unit", (k,), 1), S("counit", (k,), 0))), W((k,)))
    if name == "A2":
        k, l = colors
        return (W((k, l, k), (S("braid", (l, k), 1), S("counit", (k,), 0))),
                W((k, l, k), (S("braid", (k, l), 0), S("counit", (k,), 1))))
    if name == "A3":
        (k,) = colors
        return (W((), (S("unit", (k,), 0), S("braid", (k, k), 0))),
                W((), (S("unit", (k,), 0),)))
    if name == "A4":
        k, l = colors
        return (W((k, l), (S("braid", (k, l), 0), S("braid", (l, k), 0))), W((k, l)))
    if name == "A5":
        j, k, l = colors
        return (W((j, k, l), (S("braid", (k, l), 1), S("braid", (j, l), 0), S("braid", (j, k), 1))),
                W((j, k, l), (S("braid", (j, k), 0), S("braid", (j, l), 1), S("braid", (k, l), 0))))
    raise KeyError(name)


RELATION_ARITY = {"A1": 1, "A2": 2, "A3": 1, "A4": 2, "A5": 3}


def verify_relations(rep: Representation, palette: Iterable[int]) -> list[RelationCheck]:
    """Check A1-A5 for every color tuple from ``palette``.

    Diagram sides are compared after :func:`fold_word`; matrix sides with
    :func:`eval_word`, so a broken duality structure shows up even though
    the diagrams agree.
    """
    from itertools import product

    palette = sorted(set(int(k) for k in palette))
    for k in palette:
        rep[k]
    report = []
    for name, arity in RELATION_ARITY.items():
        for colors in product(palette, repeat=arity):
            lhs, rhs = relation_words(name, colors)
            report.append(RelationCheck(
                name, colors,
                fold_word(lhs) == fold_word(rhs),
                eval_word(rep, lhs) == eval_word(rep, rhs),
            ))
    return report


def trace_check(rep: Representation, f: Diagram) -> bool:
    """Whether ``Tr(eval(reflect(f) ∘ f))`` equals ``prod d_k^((|c^-1 k| + |c'^-1 k|) / 2)``."""
    if not dg.is_loop_free(f):
        raise NotLoopFreeError("trace_check needs a loop-free diagram")
    expected = Fraction(1)
    for k, e in dg.closure_loops(f).items():
        expected *= rep.dim(k) ** e
    return trace(rep, dg.compose(dg.reflect(f), f)) == expected


# -- faithfulness -----------------------------------------------------------------

def _factorize(n: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _kernel_vector(columns: list[list[int]]) -> list[int] | None:
    """A primitive integer vector ``l`` with ``sum_k l_k * columns[k] == 0``, or None."""
    n = len(columns)
    rows = len(columns[0]) if columns else 0
    a = [[Fraction(columns[k][r]) for k in range(n)] for r in range(rows)]
    pivots, r = [], 0
    for c in range(n):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = next((c for c in range(n) if c not in pivots), None)
    if free is None:
        return None
    vec = [Fraction(0)] * n
    vec[free] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -a[i][free]
    scale = math.lcm(*(x.denominator for x in vec))
    ints = [int(x * scale) for x in vec]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return ints


def is_faithful(dims: Sequence[int]) -> tuple[bool, list[int] | None]:
    """Decide multiplicative independence of ``dims``.

    Returns ``(True, None)`` if no nonzero integer vector ``l`` satisfies
    ``prod d_k^l_k == 1``; otherwise ``(False, l)`` with ``l`` primitive and
    its first nonzero entry positive.  The verdict covers only the colors
    supplied.
    """
    dims = [int(d) for d in dims]
    if any(d <= 0 for d in dims):
        raise ZeroDimensionError(f"dimensions must be positive, got {dims}")
    factored = [_factorize(d) for d in dims]
    primes = sorted({p for f in factored for p in f})
    columns = [[f.get(p, 0) for p in primes] for f in factored]
    witness = _kernel_vector(columns)
    return witness is None, witness
