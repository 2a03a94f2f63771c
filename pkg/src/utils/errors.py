"""
Exception hierarchy for qtorus

Every error is a ValueError so callers that only care about bad input can
catch that alone.
"""


class QTorusError(ValueError):
    """Base class for all qtorus errors"""


class LatticeError(QTorusError):
    """Mismatched ambient ranks, non-members, non-inclusions"""


class NotUnimodularError(LatticeError):
    """A matrix required to be unimodular is not"""


class ScalarError(QTorusError):
    """Mismatched scalar groups or non-unit divisors"""


class SpecMismatchError(QTorusError):
    """Elements or modules built over different algebra specs"""


class NotInvertibleError(QTorusError):
    """An action matrix has no inverse over the commutative subalgebra"""


class ModuleStructureError(QTorusError):
    """Malformed module data (splits, ranks, shapes)"""


class GrowthUnstableError(QTorusError):
    """Growth differences did not stabilize within the window bound"""


class InputFormatError(QTorusError):
    """An input file does not match its schema"""


class ComplementNotFoundError(QTorusError):
    """No commuting-monomial solution with s up to the bound"""

    def __init__(self, s_max: int):
        super().__init__(f"no solution found with s <= {s_max}")
        self.s_max = s_max
