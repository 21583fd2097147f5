"""PSL(2,q) 情形的假设扫描

对每个素数幂 q，枚举 PSL(2,q)_B 的全部可能（子群类 × |PSL(2,q)_{0B}| 的因子 ×
轨道模式 × 方程变体），逐条用下列规则反驳，第一条失败的规则计入统计：

    k-range             k 不在 [5, ⌊√(q+1) + 5/2⌋] 内
    orbit-length        子群类没有足够多长度为 k/倍数 的轨道
    stabilizer-equation 区组稳定子方程不成立
    admissibility       4-(q+1,k,1) 不可容许
    nonexistence-table  4-(q+1,k,1) 在已知不存在的设计表中
    two-fixed-points    P 为奇数且与 p 互素、位于分裂环面中且不整除 k−1，
                        于是 PSL(2,q)_{0B} 在 B 中固定第二个点
"""

from collections import Counter
from logging import debug, info
from typing import Dict, List, Optional, Tuple

from sympy import divisors, primefactors

from flagdesigns.classifier.solver import equation_holds
from flagdesigns.classifier.tables import known_nonexistent
from flagdesigns.core.designs import first_refutation, k_upper_bound, params_from
from flagdesigns.core.psl2orbits import closed_form_profile, format_subgroup, psl2_context, subgroup_order, valid_specs
from flagdesigns.models import Psl2Context, ReportEntry, StabilizerHypothesis
from flagdesigns.utils.arith import prime_powers

# 规则的固定顺序，也是报告中统计字段的顺序
RULES: Tuple[str, ...] = (
    "k-range",
    "orbit-length",
    "stabilizer-equation",
    "admissibility",
    "nonexistence-table",
    "two-fixed-points",
    "survivor",
)


def equation_variants(ctx: Psl2Context) -> List[Tuple[str, Optional[int], Tuple[int, ...]]]:
    """(变体, s, 轨道倍数) 的列表"""
    if ctx.p == 2:
        return [("simple", None, (1,))] + [("char2", int(s), (1, int(s))) for s in primefactors(ctx.e)]
    return [("simple", None, (1,)), ("extended", None, (1, 2))]


def _downstream(ctx: Psl2Context, hyp: StabilizerHypothesis) -> Tuple[str, Dict]:
    """方程成立后的反驳；返回 (规则, 细节)"""
    v, k, pw = ctx.q + 1, hyp.k, hyp.pointwise_order
    refutation = first_refutation(params_from(4, v, k))
    if refutation is not None:
        check = refutation.pop("rule")
        return "admissibility", {"check": check, **refutation}
    citation = known_nonexistent(4, v, k)
    if citation is not None:
        return "nonexistence-table", {"citation": citation}
    if pw > 1 and pw % 2 and pw % ctx.p and ctx.minus_half % pw == 0 and (k - 1) % pw:
        return "two-fixed-points", {"k_minus_1_mod": (k - 1) % pw}
    return "survivor", {}


def scan_q(q: int) -> ReportEntry:
    """扫描单个 q，返回该 q 的报告条目"""
    ctx = psl2_context(q)
    v = q + 1
    kmax = k_upper_bound(v)
    counts: Counter = Counter()
    solutions = []
    for spec in valid_specs(ctx):
        order = subgroup_order(ctx, spec)
        profile = closed_form_profile(ctx, spec)
        for pw in map(int, divisors(order)):
            length = order // pw
            for variant, s, multipliers in equation_variants(ctx):
                for multiplier in multipliers:
                    k = length * multiplier
                    if not 5 <= k <= kmax:
                        counts["k-range"] += 1
                    elif profile.counts.get(length, 0) < multiplier:
                        counts["orbit-length"] += 1
                    elif not equation_holds(k, q, pw, ctx.n, variant, s):
                        counts["stabilizer-equation"] += 1
                    else:
                        hyp = StabilizerHypothesis(
                            spec=spec,
                            spec_order=order,
                            pointwise_order=pw,
                            orbit_multiplier=multiplier,
                            variant=variant,
                            s=s,
                            k=k,
                        )
                        rule, detail = _downstream(ctx, hyp)
                        counts[rule] += 1
                        solutions.append(
                            {
                                "subgroup": format_subgroup(spec),
                                "k": k,
                                "pointwise": pw,
                                "variant": variant,
                                "multiplier": multiplier,
                                "refuted_by": rule,
                                **detail,
                            }
                        )
    debug(f"PSL(2,{q}): {dict(counts)}")
    witness = {
        "v": v,
        "k_max": kmax,
        "hypotheses": sum(counts.values()),
        "refuted": {rule: counts[rule] for rule in RULES if counts[rule]},
        "solutions": solutions,
    }
    params = {"d": 2, "q": q}
    if counts["survivor"]:
        return ReportEntry(family="PSLd", params=params, verdict="Survivor", rule="unrefuted-hypothesis", witness=witness)
    if counts["nonexistence-table"]:
        citation = next(sol["citation"] for sol in solutions if sol["refuted_by"] == "nonexistence-table")
        return ReportEntry(
            family="PSLd",
            params=params,
            verdict="EliminatedCited",
            rule="nonexistence-table",
            witness=witness,
            citation=citation,
        )
    return ReportEntry(
        family="PSLd", params=params, verdict="EliminatedMechanized", rule="stabilizer-hypotheses", witness=witness
    )


def psl2_case_scan(q_max: int, q_min: int = 4) -> List[ReportEntry]:
    """对 q_min ≤ q ≤ q_max 的全部素数幂 q 扫描 PSL(2,q) 情形"""
    if q_max < 5:
        raise ValueError(f"q_max must be at least 5, got {q_max}")
    entries = [scan_q(q) for q in prime_powers(max(q_min, 4), q_max)]
    info(f"PSL(2,q) scan over {len(entries)} values of q up to {q_max}")
    return entries
