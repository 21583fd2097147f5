"""内置数据表

二重传递群族表、已知不存在的设计表以及引用台账，都以 JSON 形式随包发布。
"""

import json
from functools import lru_cache
from importlib.resources import files
from typing import Dict, List, Optional, Tuple

from flagdesigns.models import GroupFamilyCase
from flagdesigns.utils.errors import DataIntegrityError

_read = lambda name: json.loads(files("flagdesigns.data").joinpath(name).read_text())


@lru_cache(maxsize=None)
def family_cases() -> Tuple[GroupFamilyCase, ...]:
    """二重传递群族表，顺序即报告中的族顺序"""
    return tuple(GroupFamilyCase(**row) for row in _read("two_transitive.json"))


@lru_cache(maxsize=None)
def family_rank() -> Dict[str, int]:
    return {case.family: i for i, case in enumerate(family_cases())}


@lru_cache(maxsize=None)
def citations() -> Dict[str, str]:
    return dict(_read("citations.json"))


@lru_cache(maxsize=None)
def nonexistence_table() -> Dict[Tuple[int, int, int, int], str]:
    """(t, v, k, λ) ↦ 引用键"""
    table = {}
    for row in _read("nonexistence.json"):
        key = (row["t"], row["v"], row["k"], row["lam"])
        if row["citation"] not in citations():
            raise DataIntegrityError(f"Nonexistence entry {key} cites unknown key {row['citation']!r}")
        table[key] = row["citation"]
    return table


def known_nonexistent(t: int, v: int, k: int, lam: int = 1) -> Optional[str]:
    return nonexistence_table().get((t, v, k, lam))


def checker_families(checker: str) -> List[str]:
    return [case.family for case in family_cases() if case.checker == checker]
