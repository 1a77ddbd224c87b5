"""JSON load/save for algebras and bimodules.

An algebra file is an object with "kind", "dim", "basis", and "products",
where products is a list of {"left": i, "right": j, "result": [[k, "p/q"],
...]} entries over 0-based basis indices. A bimodule file embeds its algebra
under "algebra" and adds "module_dim", "module_basis", "left_action" (left =
algebra index, right = module index), and "right_action" (left = module index,
right = algebra index). Missing products are zero. Writing is canonical:
entries sorted by index pair, coefficients in lowest terms, keys sorted, so
saving the same structure twice gives identical bytes.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, List, Tuple, Union

from .algebras import Bimodule, FiniteAlgebra, Table
from .linalg import format_scalar, parse_scalar


def _require(data: dict, keys: Tuple[str, ...], what: str) -> None:
    missing = [k for k in keys if k not in data]
    if missing:
        raise ValueError(f"{what} is missing required keys: {', '.join(missing)}")


def _parse_names(raw, count: int, what: str) -> Tuple[str, ...]:
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise ValueError(f"{what} must be a list of strings")
    if len(raw) != count:
        raise ValueError(f"{what} has {len(raw)} entries, expected {count}")
    return tuple(raw)


def _parse_table(raw, what: str) -> Table:
    if not isinstance(raw, list):
        raise ValueError(f"{what} must be a list of entries")
    table: Table = {}
    for entry in raw:
        if not isinstance(entry, dict):
            raise ValueError(f"each {what} entry must be an object")
        _require(entry, ("left", "right", "result"), f"{what} entry")
        i, j = entry["left"], entry["right"]
        if not isinstance(i, int) or not isinstance(j, int):
            raise ValueError(f"{what} indices must be integers")
        if (i, j) in table:
            raise ValueError(f"duplicate {what} entry for ({i}, {j})")
        result = entry["result"]
        if not isinstance(result, list):
            raise ValueError(f"{what} result must be a list of [index, coefficient] pairs")
        vec: Dict[int, object] = {}
        for pair in result:
            if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], int)):
                raise ValueError(f"{what} result terms must be [index, coefficient] pairs")
            k, c = pair
            if k in vec:
                raise ValueError(f"duplicate result index {k} in {what} entry ({i}, {j})")
            vec[k] = parse_scalar(c)
        table[(i, j)] = vec  # type: ignore[assignment]
    return table


def _table_to_list(table: Table) -> List[dict]:
    out = []
    for (i, j) in sorted(table):
        result = [[k, format_scalar(v)] for k, v in sorted(table[(i, j)].items())]
        out.append({"left": i, "right": j, "result": result})
    return out


def algebra_from_dict(data: dict) -> FiniteAlgebra:
    if not isinstance(data, dict):
        raise ValueError("algebra data must be a JSON object")
    _require(data, ("kind", "dim", "basis", "products"), "algebra")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError("algebra dim must be a positive integer")
    if not isinstance(data["kind"], str):
        raise ValueError("algebra kind must be a string")
    return FiniteAlgebra(
        kind=data["kind"],
        dim=dim,
        basis_names=_parse_names(data["basis"], dim, "algebra basis"),
        products=_parse_table(data["products"], "product"),
    )


def algebra_to_dict(alg: FiniteAlgebra) -> dict:
    return {
        "kind": alg.kind,
        "dim": alg.dim,
        "basis": list(alg.basis_names),
        "products": _table_to_list(alg.products),
    }


def bimodule_from_dict(data: dict) -> Bimodule:
    if not isinstance(data, dict):
        raise ValueError("bimodule data must be a JSON object")
    _require(data, ("algebra", "module_dim", "module_basis", "left_action", "right_action"),
             "bimodule")
    alg = algebra_from_dict(data["algebra"])
    dim = data["module_dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError("module_dim must be a positive integer")
    return Bimodule(
        algebra=alg,
        dim=dim,
        basis_names=_parse_names(data["module_basis"], dim, "module basis"),
        left=_parse_table(data["left_action"], "left action"),
        right=_parse_table(data["right_action"], "right action"),
    )


def bimodule_to_dict(mod: Bimodule) -> dict:
    return {
        "algebra": algebra_to_dict(mod.algebra),
        "module_dim": mod.dim,
        "module_basis": list(mod.basis_names),
        "left_action": _table_to_list(mod.left),
        "right_action": _table_to_list(mod.right),
    }


def is_bimodule_data(data: dict) -> bool:
    return isinstance(data, dict) and "algebra" in data


PathLike = Union[str, Path]


def _load_json(path: PathLike) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: top level must be a JSON object")
    return data


def _dump_json(data: dict, path: PathLike) -> None:
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_algebra(path: PathLike) -> FiniteAlgebra:
    return algebra_from_dict(_load_json(path))


def save_algebra(alg: FiniteAlgebra, path: PathLike) -> None:
    _dump_json(algebra_to_dict(alg), path)


def load_bimodule(path: PathLike) -> Bimodule:
    return bimodule_from_dict(_load_json(path))


def save_bimodule(mod: Bimodule, path: PathLike) -> None:
    _dump_json(bimodule_to_dict(mod), path)
