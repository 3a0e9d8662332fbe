"""The chromatic Brauer category with exact linear representations and Boolean state sums."""

from .diagram import (
    Diagram, Endpoint, NormalForm, Side, braid, closure_loops, compose, counit,
    enumerate_loop_free, equal_by_closure, identity, is_loop_free, left_closure, loop,
    loops_diagram, normal_form, object_counit, object_unit, permutation_diagram,
    reassemble, reflect, right_closure, tensor, tensor_all, unit,
)
from .dsl import parse_expr
from .errors import (
    BoundaryMismatchError, CbrError, IncompatibleLayersError, InvalidDiagramError,
    MatrixError, NotLoopFreeError, ParseError, SingularMatrixError, UnknownColorError,
    UnsupportedFormatError,
)
from .quantize import CobordismWord, FieldSet, action, glue, stack, state_sum
from .represent import (
    DualityStructure, GeneratorWord, RationalMatrix, Representation, Slice,
    duality_from_matrix, eval_diagram, eval_word, fold_word, is_faithful, trace,
    verify_relations,
)
from .semiring import BoolSeries, NatPoly, QElement, chi, q_compose_mul, q_monoidal_mul, q_sum

__version__ = "0.1.0"
