"""
Class-2 torsion-free nilpotent groups H and their reduction to quantum tori

H has generators h_1..h_n modulo its center Z(H) = Z^z, and commutators
[h_i, h_j] = z^comm(i, j) central. Elements are pairs (a, u) standing for
h_1^a_1 ... h_n^a_n z^u. A central character sends the center to the value
group, and the group algebra modulo its kernel becomes F*A with A = Z^n.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from src.algebra import AlgebraSpec
from src.lattice import Sublattice
from src.scalars import GammaElement
from src.utils.errors import SpecMismatchError

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
GroupElement = Tuple[Vector, Vector]


@dataclass(frozen=True)
class Class2Datum:
    n: int
    z: int
    comm: Tuple[Tuple[Tuple[int, int], Vector], ...]

    @classmethod
    def build(cls, n: int, z: int, comm: Mapping[Tuple[int, int], Sequence[int]]) -> "Class2Datum":
        """
        Args:
            n: Rank of H modulo its center
            z: Rank of the center
            comm: [h_i, h_j] for 0-based i < j, as exponent vectors of length z
        """
        if n < 1 or z < 1:
            raise SpecMismatchError(f"need n >= 1 and z >= 1, got n={n}, z={z}")
        entries = {}
        for (i, j), vec in comm.items():
            if not 0 <= i < j < n:
                raise SpecMismatchError(f"commutator index pair ({i + 1}, {j + 1}) must satisfy i < j <= {n}")
            if len(vec) != z:
                raise SpecMismatchError(f"commutator ({i + 1}, {j + 1}) needs {z} exponents")
            vec = tuple(int(x) for x in vec)
            if any(vec):
                entries[(i, j)] = vec
        return cls(n, z, tuple(sorted(entries.items())))

    @cached_property
    def _lookup(self) -> Dict[Tuple[int, int], Vector]:
        return dict(self.comm)

    def commutator(self, i: int, j: int) -> Vector:
        """[h_i, h_j] for any 0-based pair"""
        if i == j:
            return (0,) * self.z
        if i > j:
            return tuple(-x for x in self.commutator(j, i))
        return self._lookup.get((i, j), (0,) * self.z)

    def check(self, h: GroupElement) -> GroupElement:
        a, u = h
        if len(a) != self.n or len(u) != self.z:
            raise SpecMismatchError(f"group element needs parts of lengths {self.n} and {self.z}")
        return tuple(int(x) for x in a), tuple(int(x) for x in u)


@dataclass(frozen=True)
class CentralCharacter:
    """Image of each central generator in the value group"""
    images: Tuple[GammaElement, ...]
    torsion_order: int
    free_params: int

    @classmethod
    def build(cls, images: Iterable[GammaElement], torsion_order: int, free_params: int) -> "CentralCharacter":
        images = tuple(images)
        for k, g in enumerate(images):
            if g.signature != (torsion_order, free_params):
                raise SpecMismatchError(f"image {k + 1} has (N, m) = {g.signature}")
        return cls(images, torsion_order, free_params)

    def __call__(self, u: Sequence[int]) -> GammaElement:
        total = GammaElement.zero(self.torsion_order, self.free_params)
        for k, g in zip(u, self.images):
            if k:
                total = total + k * g
        return total

    def __add__(self, other: "CentralCharacter") -> "CentralCharacter":
        return CentralCharacter.build(
            [a + b for a, b in zip(self.images, other.images)], self.torsion_order, self.free_params
        )


def _collect(datum: Class2Datum, a: Sequence[int], b: Sequence[int]) -> Vector:
    """Central term from moving h^b's generators left past those of h^a"""
    out = [0] * datum.z
    for i in range(datum.n):
        for j in range(i):
            if a[i] and b[j]:
                # h_i h_j = [h_i, h_j] h_j h_i
                c = datum.commutator(i, j)
                out = [x + a[i] * b[j] * y for x, y in zip(out, c)]
    return tuple(out)


def h_multiply(datum: Class2Datum, h: GroupElement, k: GroupElement) -> GroupElement:
    (a, u), (b, w) = datum.check(h), datum.check(k)
    extra = _collect(datum, a, b)
    return (
        tuple(x + y for x, y in zip(a, b)),
        tuple(x + y + e for x, y, e in zip(u, w, extra)),
    )


def h_inverse(datum: Class2Datum, h: GroupElement) -> GroupElement:
    a, u = datum.check(h)
    neg = tuple(-x for x in a)
    extra = _collect(datum, a, neg)
    return neg, tuple(-x - e for x, e in zip(u, extra))


def group_commutator(datum: Class2Datum, h: GroupElement, k: GroupElement) -> Vector:
    """[h, k] = h k h^-1 k^-1, central, bilinear in the Z^n parts"""
    (a, _), (b, _) = datum.check(h), datum.check(k)
    out = [0] * datum.z
    for i in range(datum.n):
        for j in range(i + 1, datum.n):
            w = a[i] * b[j] - a[j] * b[i]
            if w:
                out = [x + w * y for x, y in zip(out, datum.commutator(i, j))]
    return tuple(out)


def is_abelian(datum: Class2Datum, generators: Sequence[GroupElement]) -> bool:
    return all(
        not any(group_commutator(datum, generators[p], generators[q]))
        for p in range(len(generators))
        for q in range(p + 1, len(generators))
    )


def reduce(datum: Class2Datum, chi: CentralCharacter) -> AlgebraSpec:
    """Spec of kH / P kH (x) K with g_ij = chi([h_i, h_j])"""
    if len(chi.images) != datum.z:
        raise SpecMismatchError(f"character has {len(chi.images)} images, the center has rank {datum.z}")
    q = {pair: chi(vec) for pair, vec in datum.comm}
    spec = AlgebraSpec.build(datum.n, chi.torsion_order, chi.free_params, q)
    logger.debug("reduced class-2 datum to a rank-%d spec with %d nonzero entries", spec.rank, len(spec.q))
    return spec


def subgroup_image(datum: Class2Datum, generators: Sequence[GroupElement]) -> Sublattice:
    """Image of L = <generators> in A = H / Z(H)"""
    parts = [datum.check(h)[0] for h in generators]
    return Sublattice.from_generators(parts, datum.n)
