"""Exact computations with linear sets of complementary weights on the
projective line and even-type point sets in the projective plane."""

from .fields import (ENUMERATION_BOUND, EnumerationBudgetError, FieldElement,
                     FieldTower, FiniteField, LevelMismatchError, make_tower)
from .linpoly import LinPoly
from .subspaces import FqSubspace, span
from .linset import LinearSet, WeightEnumerator
from .families import Family, WeightPrediction
from .evensets import EvenSetReport

__all__ = [
    "ENUMERATION_BOUND", "EnumerationBudgetError", "EvenSetReport",
    "Family", "FieldElement", "FieldTower", "FiniteField", "FqSubspace",
    "LevelMismatchError", "LinPoly", "LinearSet", "WeightEnumerator",
    "WeightPrediction", "make_tower", "span",
]

__version__ = "0.1.0"
