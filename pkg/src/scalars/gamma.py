"""
The value group Z/N + Z^m of multiparameters, written additively
"""
from dataclasses import dataclass
from typing import Sequence, Tuple

from src.utils.errors import ScalarError


@dataclass(frozen=True)
class GammaElement:
    """
    zeta_N^tors * t^free, stored as exponents

    modulus is N (N = 1 means no roots of unity); tors is kept reduced into
    [0, N).
    """
    modulus: int
    tors: int
    free: Tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ScalarError(f"torsion order must be positive, got {self.modulus}")
        object.__setattr__(self, "tors", int(self.tors) % self.modulus)
        object.__setattr__(self, "free", tuple(int(e) for e in self.free))

    @classmethod
    def zero(cls, modulus: int, free_params: int) -> "GammaElement":
        return cls(modulus, 0, (0,) * free_params)

    @property
    def free_params(self) -> int:
        return len(self.free)

    @property
    def signature(self) -> Tuple[int, int]:
        return self.modulus, self.free_params

    def _check(self, other: "GammaElement") -> None:
        if self.signature != other.signature:
            raise ScalarError(
                f"scalar groups differ: (N, m) = {self.signature} vs {other.signature}"
            )

    def __add__(self, other: "GammaElement") -> "GammaElement":
        self._check(other)
        return GammaElement(
            self.modulus,
            self.tors + other.tors,
            tuple(a + b for a, b in zip(self.free, other.free)),
        )

    def __neg__(self) -> "GammaElement":
        return GammaElement(self.modulus, -self.tors, tuple(-a for a in self.free))

    def __sub__(self, other: "GammaElement") -> "GammaElement":
        return self + (-other)

    def __mul__(self, k: int) -> "GammaElement":
        return GammaElement(self.modulus, k * self.tors, tuple(k * a for a in self.free))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.tors == 0 and not any(self.free)


def gamma_add(g1: GammaElement, g2: GammaElement) -> GammaElement:
    return g1 + g2


def gamma_neg(g: GammaElement) -> GammaElement:
    return -g


def gamma_scale(k: int, g: GammaElement) -> GammaElement:
    return k * g


def gamma_is_zero(g: GammaElement) -> bool:
    return g.is_zero()


def gamma_sum(items: Sequence[GammaElement], modulus: int, free_params: int) -> GammaElement:
    total = GammaElement.zero(modulus, free_params)
    for g in items:
        total = total + g
    return total
