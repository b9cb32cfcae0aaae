import argparse
import sys
from typing import List, Optional

from loguru import logger

from core.config import LOG_LEVEL
from core.pipeline import (
    PipelineConfig,
    Report,
    cmd_chow,
    cmd_cycle_map,
    cmd_detect,
    cmd_gr_gamma,
    cmd_group_info,
    cmd_table,
    cmd_verify,
    parse_choice,
)
from core.utils import LogManager, WorkbenchError

"""Main entry point of the workbench: group, table, gamma, Chow ring and verify commands"""


# -----------------------------------------------------------------------
# run.py 使用方式說明
# -----------------------------------------------------------------------
# Description: workbench 的命令列入口，每個子命令印出報告並存成 CSV
# Parameters: 子命令與其參數；全域選項 --seed、--log-level、--degree-bound
# Example: python run.py group info G
#          python run.py gr-gamma G --degree 2
#          python run.py chow G
#          python run.py cycle-map --group G --cohom builtin:64#138 --choice "c1(phi0)=b1_1^2@1"
#          python run.py verify
# Notes: verify 有任何 FAIL 時結束碼為 1；其他錯誤也以 1 結束
#


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        description="Chow ring workbench for unitriangular groups"
    )
    parser.add_argument("--seed", type=int, default=0, help="Seed for randomized property checks")
    parser.add_argument("--log-level", type=str, default=LOG_LEVEL, help="Console log level")
    parser.add_argument("--degree-bound", type=int, default=None, help="Highest Chow degree for presentations")
    parser.add_argument("--no-csv", action="store_true", help="Do not write the report CSV")

    commands = parser.add_subparsers(dest="command", required=True)

    group_parser = commands.add_parser("group", help="Group information")
    group_parser.add_argument("action", choices=["info"])
    group_parser.add_argument("key", type=str, help="Group key, e.g. G, U(3,3), G/H0")

    table_parser = commands.add_parser("table", help="Character table")
    table_parser.add_argument("key", type=str)

    gamma_parser = commands.add_parser("gr-gamma", help="Graded piece of the gamma filtration")
    gamma_parser.add_argument("key", type=str)
    gamma_parser.add_argument("--degree", type=int, required=True)

    chow_parser = commands.add_parser("chow", help="Chow ring presentation")
    chow_parser.add_argument("target", choices=["H", "L", "G"])
    chow_parser.add_argument("--keep-symmetry", action="store_true", help="Do not fix the generator symmetry of G")

    cycle_parser = commands.add_parser("cycle-map", help="Cycle class map candidates")
    cycle_parser.add_argument("--group", type=str, required=True)
    cycle_parser.add_argument("--cohom", type=str, default=None, help="builtin:<id> or a presentation file")
    cycle_parser.add_argument("--choice", action="append", default=[], help="GEN=ELEMENT@SLOT")

    detect_parser = commands.add_parser("detect", help="Detection bound and centralizers")
    detect_parser.add_argument("key", type=str)

    commands.add_parser("verify", help="Run every check")

    return parser.parse_args(argv)


def run_command(args: argparse.Namespace) -> Report:
    config: PipelineConfig = PipelineConfig.default(degree_bound=args.degree_bound, seed=args.seed)

    if args.command == "group":
        return cmd_group_info(args.key)
    if args.command == "table":
        return cmd_table(args.key)
    if args.command == "gr-gamma":
        return cmd_gr_gamma(args.key, args.degree, config)
    if args.command == "chow":
        config.fix_symmetry = not args.keep_symmetry
        return cmd_chow(args.target, config)
    if args.command == "cycle-map":
        choices = [parse_choice(text) for text in args.choice]
        return cmd_cycle_map(args.group, args.cohom, choices, config)
    if args.command == "detect":
        return cmd_detect(args.key)
    return cmd_verify(config)


def main(argv: Optional[List[str]] = None) -> int:
    args: argparse.Namespace = parse_arguments(argv)

    LogManager.setup_console(args.log_level)
    LogManager.setup_logger("workbench.log")
    LogManager.setup_report_logger(args.command)

    try:
        report: Report = run_command(args)
    except WorkbenchError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 1

    print(report.text())
    if not args.no_csv:
        report.save_csv()
    if args.command == "verify" and not report.ok:
        logger.error(f"verify: {len(report.failed)} check(s) failed")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
