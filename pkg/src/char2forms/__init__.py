"""Bilinear forms, their preserving Lie (super)algebras and contact 1-forms in characteristic 2."""

from .ff import FieldCtx, FieldElem, FieldError, make_ctx, parse_field
from .mat import FormMatrix, MatrixError, identity, matrix, standard_form

__all__ = [
    "FieldCtx",
    "FieldElem",
    "FieldError",
    "FormMatrix",
    "MatrixError",
    "identity",
    "make_ctx",
    "matrix",
    "parse_field",
    "standard_form",
]
__version__ = "0.1.0"
