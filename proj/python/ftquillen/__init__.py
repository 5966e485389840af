"""Python bindings for the ftquillen core."""

from ._core import (
    ConsistencyError,
    DatumParseError,
    IntegerOverflowError,
    analyze_function_field,
    analyze_number_field,
    class_group,
    essential_product,
    graded_dimension,
    load_datum,
    refined_gate,
    s_unit_rank,
    smith_diagonal,
    split_datum,
)

__all__ = [
    "ConsistencyError",
    "DatumParseError",
    "IntegerOverflowError",
    "analyze_function_field",
    "analyze_number_field",
    "class_group",
    "essential_product",
    "graded_dimension",
    "load_datum",
    "refined_gate",
    "s_unit_rank",
    "smith_diagonal",
    "split_datum",
]
