"""分类的汇总运行

把各族检查器的结果合并为一份 EliminationReport，并施加规范顺序
（族在二重传递群族表中的位置，其次参数升序），因此报告与 jobs 无关。
"""

from concurrent.futures import Future, ProcessPoolExecutor
from logging import info, warning
from typing import Callable, Dict, List, Optional, Set, Tuple

from flagdesigns.classifier.families import (
    check_affine_gammaL1,
    check_psl3_range,
    check_psld_reduction,
    check_psu3,
    check_ree,
    check_small_cases,
    check_sp2d2,
    check_sz,
    cited_entries,
    default_d_max,
    default_e_max,
    mathieu_entries,
)
from flagdesigns.classifier.psl2_scan import psl2_case_scan, scan_q
from flagdesigns.classifier.tables import checker_families, citations, family_cases, family_rank
from flagdesigns.models import EliminationReport, Limits, ReportEntry
from flagdesigns.utils.arith import prime_powers
from flagdesigns.utils.errors import DataIntegrityError, InternalConsistencyError

# 主定理给出的幸存者：(族, 参数)
EXPECTED_SURVIVORS: Set[Tuple[str, Tuple[Tuple[str, int], ...]]] = {
    ("Mathieu", (("v", 11),)),
    ("Mathieu", (("v", 23),)),
}


def _ceiling(explicit: Optional[int], derived: int) -> int:
    return explicit if explicit is not None else derived


def _sz(limits: Limits) -> List[ReportEntry]:
    e_max = _ceiling(limits.e_max, default_e_max(limits.v_max, 2, 2))
    return check_sz(e_max) if e_max else []


def _ree(limits: Limits) -> List[ReportEntry]:
    e_max = _ceiling(limits.e_max, default_e_max(limits.v_max, 3, 3))
    return check_ree(e_max) if e_max else []


def _sp2d2(limits: Limits) -> List[ReportEntry]:
    d_max = _ceiling(limits.d_max, default_d_max(limits.v_max))
    return check_sp2d2(d_max) if d_max else []


# scan --family 名称 ↦ 检查器
FAMILY_RUNNERS: Dict[str, Callable[[Limits], List[ReportEntry]]] = {
    "psl2": lambda limits: psl2_case_scan(limits.q_max),
    "affine-gamma": lambda limits: check_affine_gammaL1(limits.v_max),
    "small": lambda limits: check_small_cases(),
    "psl3": lambda limits: check_psl3_range(limits.v_max) + [check_psld_reduction()],
    "psu3": lambda limits: check_psu3(limits.v_max),
    "sz": _sz,
    "ree": _ree,
    "sp2d2": _sp2d2,
    "cited": lambda limits: cited_entries(),
    "mathieu": lambda limits: mathieu_entries(),
}


def canonical_key(entry: ReportEntry):
    return family_rank()[entry.family], tuple(sorted(entry.params.items()))


def canonical_order(entries: List[ReportEntry]) -> List[ReportEntry]:
    return sorted(entries, key=canonical_key)


def _scan_shard(qs: List[int]) -> List[ReportEntry]:
    return [scan_q(q) for q in qs]


def _psl2_futures(pool: ProcessPoolExecutor, limits: Limits) -> List[Future]:
    """按 qs[i::jobs] 把 q 的范围分给各进程"""
    qs = prime_powers(4, limits.q_max)
    shards = [qs[i :: limits.jobs] for i in range(limits.jobs)]
    return [pool.submit(_scan_shard, shard) for shard in shards if shard]


def run_family(name: str, limits: Limits) -> List[ReportEntry]:
    """运行单个族的检查器；psl2 在 jobs > 1 时分片并行

    Raises:
        ValueError: 未知的族名
    """
    if name not in FAMILY_RUNNERS:
        raise ValueError(f"Unknown family {name!r}")
    info(f"Running {name} checker, list entries: {checker_families(name)}")
    if name == "psl2" and limits.jobs > 1:
        with ProcessPoolExecutor(max_workers=limits.jobs) as pool:
            entries = [entry for future in _psl2_futures(pool, limits) for entry in future.result()]
        return canonical_order(entries)
    return canonical_order(FAMILY_RUNNERS[name](limits))


def _parallel(limits: Limits) -> List[ReportEntry]:
    entries = []
    with ProcessPoolExecutor(max_workers=limits.jobs) as pool:
        futures = _psl2_futures(pool, limits)
        futures += [pool.submit(run_family, name, limits) for name in FAMILY_RUNNERS if name != "psl2"]
        for future in futures:
            entries.extend(future.result())
    return entries


def check_coverage(report: EliminationReport) -> None:
    """每个族至少出现一次，每个引用键都在台账中，(族, 参数) 不重复

    Raises:
        InternalConsistencyError: 族缺失或条目重复
        DataIntegrityError: 引用键不在台账中
    """
    seen = {entry.family for entry in report.entries}
    missing = [case.family for case in family_cases() if case.family not in seen]
    if missing:
        raise InternalConsistencyError(f"Families missing from the report: {', '.join(missing)}")
    keys = [entry.sort_key() for entry in report.entries]
    if len(set(keys)) != len(keys):
        raise InternalConsistencyError("Report contains duplicate (family, params) entries")
    for entry in report.entries:
        if entry.citation is not None and entry.citation not in citations():
            raise DataIntegrityError(f"Entry {entry.sort_key()} cites unknown key {entry.citation!r}")
        if entry.verdict == "EliminatedCited" and entry.citation is None:
            raise InternalConsistencyError(f"Cited entry {entry.sort_key()} has no citation")


def run_classification(limits: Limits) -> EliminationReport:
    """运行全部检查器并汇总

    Args:
        limits (Limits): 扫描范围与并行度

    Returns:
        EliminationReport: 规范顺序的完整报告

    示例:
        >>> report = run_classification(Limits(q_max=50, v_max=2000))
        >>> matches_main_theorem(report)
        True
    """
    if limits.jobs > 1:
        entries = _parallel(limits)
    else:
        entries = [entry for name in FAMILY_RUNNERS for entry in run_family(name, limits)]
    report = EliminationReport(entries=canonical_order(entries))
    check_coverage(report)
    info(
        f"Classification: {len(report.entries)} entries, "
        f"{report.count('EliminatedMechanized')} mechanized, {report.count('EliminatedCited')} cited, "
        f"{report.count('Survivor')} survivors"
    )
    if not matches_main_theorem(report):
        warning(f"Unexpected survivor set: {report.survivor_keys()}")
    return report


def matches_main_theorem(report: EliminationReport) -> bool:
    return set(report.survivor_keys()) == EXPECTED_SURVIVORS
