"""命令行入口

子命令：verify-design、witt、orbits、scan、classify。
返回码：0 成功 / PASS，1 验证失败或分类结果不符，2 用法或输入错误。
"""

import logging
import sys
from argparse import ArgumentParser
from logging import info
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from flagdesigns.classifier.runner import EXPECTED_SURVIVORS, matches_main_theorem, run_classification, run_family
from flagdesigns.core.designs import is_flag_transitive, verify_steiner
from flagdesigns.core.fileformat import format_design, read_design, read_group, write_design, write_group
from flagdesigns.core.psl2orbits import brute_profile, closed_form_profile, construct_subgroup, parse_subgroup, psl2_context
from flagdesigns.core.witt import mathieu_group, verify_witt_pair, witt_design
from flagdesigns.models import SCAN_FAMILIES, CliConfig, EliminationReport, Limits
from flagdesigns.models.limits import DEFAULT_SEED
from flagdesigns.utils.errors import (
    DataIntegrityError,
    InternalConsistencyError,
    NotAutomorphismError,
    VerificationError,
)

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized subgroup searches")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    parser = ArgumentParser(prog="flagdesigns", description="Flag-transitive Steiner 4-design classification")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify-design", parents=[common], help="check a design file")
    verify.add_argument("--file", required=True, help="design file")
    verify.add_argument("--t", type=int, default=4, help="strength")
    verify.add_argument("--group", help="group file, also checks flag-transitivity")

    witt = commands.add_parser("witt", parents=[common], help="build or verify the Witt designs")
    witt.add_argument("--v", type=int, choices=(11, 23))
    witt.add_argument("--emit", help="write the design file here")
    witt.add_argument("--group", help="write the Mathieu group file here")
    witt.add_argument("--verify", action="store_true", help="run the full verification")

    orbits = commands.add_parser("orbits", parents=[common], help="orbit profile of a PSL(2,q) subgroup")
    orbits.add_argument("--q", type=int, required=True)
    orbits.add_argument("--subgroup", required=True, help="cyclic:c | dihedral:c | ea:qbar | semi:qbar:c | a4 | s4 | a5 | psl2:qbar | pgl2:qbar")
    orbits.add_argument("--oracle", action="store_true", help="compare with the orbits of a constructed subgroup")

    scan = commands.add_parser("scan", parents=[common], help="run one family checker")
    scan.add_argument("--family", required=True, choices=SCAN_FAMILIES)
    scan.add_argument("--max-q", type=int)
    scan.add_argument("--max-v", type=int)
    scan.add_argument("--max-e", type=int)
    scan.add_argument("--out", help="report file (JSON), stdout when omitted")

    classify = commands.add_parser("classify", parents=[common], help="run every checker")
    classify.add_argument("--max-q", type=int)
    classify.add_argument("--max-v", type=int)
    classify.add_argument("--max-e", type=int)
    classify.add_argument("--out", help="report file (JSON), stdout when omitted")
    return parser


def _limits(config: CliConfig) -> Limits:
    fields = {"q_max": config.max_q, "v_max": config.max_v, "e_max": config.max_e}
    return Limits(seed=config.seed, jobs=config.jobs, **{key: value for key, value in fields.items() if value is not None})


def _emit_report(report: EliminationReport, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(report.to_json().decode() + "\n")
        return
    Path(out).write_bytes(report.to_json())
    print(
        f"{len(report.entries)} entries, {len(report.survivors())} survivors: "
        f"{', '.join(f'{family} {dict(params)}' for family, params in report.survivor_keys()) or 'none'}"
    )


def verify_design(config: CliConfig) -> int:
    design = read_design(config.file)
    verdict = verify_steiner(design, config.t)
    print(f"{verdict.label} {config.t}-({design.v},{design.k},1): {verdict.reason}")
    if not verdict.passed:
        print(f"witness: {' '.join(map(str, verdict.witness))}")
    passed = verdict.passed
    if config.group is not None:
        group = read_group(config.group)
        try:
            flag = is_flag_transitive(design, group)
        except NotAutomorphismError as error:
            print(f"FAIL flag-transitive: {error}")
            return 1
        print(f"{flag.label} flag-transitive: {flag.reason}")
        passed = passed and flag.passed
    return 0 if passed else 1


def witt(config: CliConfig) -> int:
    if config.v is not None:
        design = witt_design(config.v)
        if config.emit is not None:
            write_design(design, config.emit)
            info(f"Wrote {config.emit}")
        if config.group is not None:
            write_group(mathieu_group(config.v), config.group)
            info(f"Wrote {config.group}")
        if config.emit is None and config.group is None and not config.verify:
            sys.stdout.write(format_design(design))
    if config.verify:
        for v in (config.v,) if config.v is not None else (11, 23):
            print(f"PASS v={v}: flag orbit {verify_witt_pair(v)}")
    return 0


def orbits(config: CliConfig) -> int:
    ctx = psl2_context(config.q)
    spec = parse_subgroup(config.subgroup, config.q)
    profile = closed_form_profile(ctx, spec)
    print("\n".join(profile.format()))
    if not config.oracle:
        return 0
    brute = brute_profile(construct_subgroup(ctx, spec, config.seed))
    print("oracle:")
    print("\n".join(brute.format()))
    agree = brute == profile
    print("AGREE" if agree else "DISAGREE")
    return 0 if agree else 1


def scan(config: CliConfig) -> int:
    report = EliminationReport(entries=run_family(config.family, _limits(config)))
    _emit_report(report, config.out)
    return 0 if set(report.survivor_keys()) <= EXPECTED_SURVIVORS else 1


def classify(config: CliConfig) -> int:
    report = run_classification(_limits(config))
    _emit_report(report, config.out)
    return 0 if matches_main_theorem(report) else 1


COMMANDS: Dict[str, Callable[[CliConfig], int]] = {
    "verify-design": verify_design,
    "witt": witt,
    "orbits": orbits,
    "scan": scan,
    "classify": classify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """命令行主函数

    Args:
        argv (Optional[List[str]]): 参数列表，默认取 sys.argv[1:]

    Returns:
        int: 返回码
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as error:
        return error.code
    logging.basicConfig(level=LOG_LEVELS.get(args.verbose, logging.DEBUG), format="%(levelname)s %(message)s")
    try:
        config = CliConfig(**{key.replace("-", "_"): value for key, value in vars(args).items()})
        return COMMANDS[config.command](config)
    except ValidationError as error:
        print(f"error: {error.errors()[0]['msg']}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except (VerificationError, DataIntegrityError, InternalConsistencyError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
