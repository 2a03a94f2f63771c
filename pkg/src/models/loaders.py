"""
Reading input files and converting module and group data

Parse errors surface as InputFormatError naming the offending field.
"""
import json
import logging
from pathlib import Path
from typing import Any, List, Sequence, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from src.algebra import AlgebraSpec, rebase
from src.lattice import Sublattice
from src.models.convert import element_from_file, element_to_file, sublattice_from_file
from src.models.schemas import (
    ActionEntry,
    CharacterFile,
    CommEntry,
    DatumFile,
    GammaModel,
    GeneratorPair,
    ModuleFile,
    SublatticeFile,
    VectorFile,
)
from src.modules import CFiniteModule
from src.nilpotent import CentralCharacter, Class2Datum
from src.scalars import GammaElement
from src.utils.errors import InputFormatError

logger = logging.getLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)


def _describe(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        field = ".".join(str(x) for x in error.get("loc", ())) or "<root>"
        parts.append(f"{field}: {error.get('msg', 'invalid value')}")
    return "; ".join(parts)


def read_json(path: Union[str, Path]) -> Any:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc


def parse(model: Type[Model], data: Any, source: str = "input") -> Model:
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        raise InputFormatError(f"{source}: {_describe(exc)}") from exc


def load(model: Type[Model], path: Union[str, Path]) -> Model:
    logger.debug("loading %s from %s", model.__name__, path)
    return parse(model, read_json(path), str(path))


def load_sublattice(path: Union[str, Path], n: int) -> Sublattice:
    """A sublattice file is {"basis": rows} or a bare list of rows"""
    data = read_json(path)
    if isinstance(data, list):
        data = {"basis": data}
    return sublattice_from_file(parse(SublatticeFile, data, str(path)), n)


def module_from_file(data: ModuleFile, spec: AlgebraSpec) -> CFiniteModule:
    n = spec.rank
    if len(data.split) != n or any(len(row) != n for row in data.split):
        raise InputFormatError(f"split: expected a {n}x{n} matrix")
    if not 0 <= data.r <= n:
        raise InputFormatError(f"r: must lie in 0..{n}")
    expected = list(range(data.r + 1, n + 1))
    by_j = {entry.j: entry for entry in data.actions}
    if sorted(by_j) != expected or len(by_j) != len(data.actions):
        raise InputFormatError(f"actions: need exactly one entry for each j in {expected}")

    local = rebase(spec, data.split)

    def matrix(rows, where: str):
        if len(rows) != data.d or any(len(row) != data.d for row in rows):
            raise InputFormatError(f"{where}: expected a {data.d}x{data.d} matrix")
        return [[element_from_file(x, local) for x in row] for row in rows]

    actions, inverses = [], []
    for j in expected:
        entry = by_j[j]
        actions.append(matrix(entry.matrix, f"actions[j={j}].matrix"))
        inverses.append(None if entry.inverse is None else matrix(entry.inverse, f"actions[j={j}].inverse"))
    return CFiniteModule.build(spec, data.split, data.r, actions, inverses, d=data.d, local=local)


def module_to_file(module: CFiniteModule) -> ModuleFile:
    def rows(a):
        return [[element_to_file(x) for x in row] for row in a]

    return ModuleFile(
        split=[list(row) for row in module.split],
        r=module.r,
        d=module.d,
        actions=[
            ActionEntry(j=module.r + k + 1, matrix=rows(a), inverse=rows(inv))
            for k, (a, inv) in enumerate(zip(module.actions, module.inverses))
        ],
    )


def vector_from_file(data: VectorFile, module: CFiniteModule):
    if len(data.components) != module.d:
        raise InputFormatError(f"components: expected {module.d} entries, got {len(data.components)}")
    return module.vector([element_from_file(x, module.local) for x in data.components])


def vector_to_file(v: Sequence) -> VectorFile:
    return VectorFile(components=[element_to_file(x) for x in v])


def datum_from_file(data: DatumFile) -> Class2Datum:
    return Class2Datum.build(data.n, data.z, {(e.i - 1, e.j - 1): e.central for e in data.comm})


def datum_to_file(datum: Class2Datum) -> DatumFile:
    return DatumFile(
        n=datum.n,
        z=datum.z,
        comm=[CommEntry(i=i + 1, j=j + 1, central=list(vec)) for (i, j), vec in datum.comm],
    )


def character_from_file(data: CharacterFile) -> CentralCharacter:
    images = [GammaElement(data.torsion_order, g.tors, tuple(g.free)) for g in data.images]
    return CentralCharacter.build(images, data.torsion_order, data.free_params)


def character_to_file(chi: CentralCharacter) -> CharacterFile:
    return CharacterFile(
        images=[GammaModel(tors=g.tors, free=list(g.free)) for g in chi.images],
        torsion_order=chi.torsion_order,
        free_params=chi.free_params,
    )


def generators_from_file(pairs: List[GeneratorPair], datum: Class2Datum):
    out = []
    for k, pair in enumerate(pairs):
        u = pair.u or [0] * datum.z
        if len(pair.a) != datum.n or len(u) != datum.z:
            raise InputFormatError(f"generators[{k}]: expected parts of lengths {datum.n} and {datum.z}")
        out.append((tuple(pair.a), tuple(u)))
    return out
