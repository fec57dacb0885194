"""pcfflow 命令行入口.

子命令:
    build   从预设或调度文件构造结构，写出导出 JSON 并打印校验报告
    verify  重新校验导出的结构（可附带 chain 文件）
    laws    运行随机定律检查
    oracle  穷举判定两个条件是否有共同扩张
    parse   规范化序数表达式

退出码: 0 成功/全部通过，1 校验失败或条件不相容，2 用法或输入错误。
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any

from .builder import PRESETS, Chain, PcfStructure, extract, load_schedule, preset, run
from .exceptions import PcfFlowError
from .kernel import Condition, compat_oracle, validate
from .ordinal import OrdinalParseError, format_ordinal, fund_seq, parse
from .verify import check_condition_laws, check_structure, render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _read_json(path: Path) -> Any:
    with path.open(encoding="utf-8") as f:
        return json.load(f)


def _write_json(path: Path, data: Any) -> None:
    path.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def cmd_build(args: argparse.Namespace) -> int:
    if args.preset is not None:
        schedule = preset(args.preset)
    else:
        schedule = load_schedule(_read_json(args.schedule))

    chain = run(schedule)
    structure = extract(chain)
    _write_json(args.out, structure.to_export())
    if args.chain_out is not None:
        _write_json(args.chain_out, chain.to_dict())
    logger.info(f"结构已写入 {args.out}")

    report = check_structure(structure, chain)
    sys.stdout.write(render(report, args.format))
    return report.exit_code


def cmd_verify(args: argparse.Namespace) -> int:
    structure = PcfStructure.from_export(_read_json(args.input))
    chain = None
    if args.chain is not None:
        chain = Chain.from_dict(_read_json(args.chain))
        # 审计表只能从 chain 重建；B 与 A 保留文件中的内容
        structure = replace(structure, audit=extract(chain).audit)

    report = check_structure(structure, chain)
    sys.stdout.write(render(report, args.format))
    return report.exit_code


def cmd_laws(args: argparse.Namespace) -> int:
    report = check_condition_laws(args.samples, args.seed)
    sys.stdout.write(render(report, args.format))
    return report.exit_code


def _load_condition(path: Path) -> Condition:
    condition = Condition.from_dict(_read_json(path))
    violations = validate(condition)
    if violations:
        details = "; ".join(v.message for v in violations)
        raise PcfFlowError(f"{path} 不是合法条件: {details}")
    return condition


def cmd_oracle(args: argparse.Namespace) -> int:
    p = _load_condition(args.p)
    q = _load_condition(args.q)
    r = compat_oracle(p, q)
    if r is None:
        print("incompatible")
        return EXIT_FAILED
    print(json.dumps(r.to_dict(), indent=2, ensure_ascii=False))
    return EXIT_OK


def cmd_parse(args: argparse.Namespace) -> int:
    x = parse(args.expr)
    if args.fund is not None:
        print(format_ordinal(fund_seq(x, args.fund)))
    else:
        print(f"{format_ordinal(x)} ({x.classification})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcfflow",
        description="有限条件 forcing 构造与校验工具",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="输出调试日志")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="构造结构并写出导出 JSON")
    source = build.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset", help=f"预设调度: {', '.join(PRESETS)}")
    source.add_argument("--schedule", type=Path, help="调度 JSON 文件")
    build.add_argument("--out", type=Path, required=True, help="结构导出文件")
    build.add_argument("--chain-out", dest="chain_out", type=Path, help="chain 输出文件")
    build.add_argument("--format", choices=("text", "json"), default="text")
    build.set_defaults(handler=cmd_build)

    verify = sub.add_parser("verify", help="校验导出的结构")
    verify.add_argument("--in", dest="input", type=Path, required=True, help="结构导出文件")
    verify.add_argument("--chain", type=Path, help="chain 文件，提供时运行全部检查")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(handler=cmd_verify)

    laws = sub.add_parser("laws", help="随机定律检查")
    laws.add_argument("--samples", type=int, default=1000)
    laws.add_argument("--seed", type=int, default=42)
    laws.add_argument("--format", choices=("text", "json"), default="text")
    laws.set_defaults(handler=cmd_laws)

    oracle = sub.add_parser("oracle", help="穷举寻找共同扩张")
    oracle.add_argument("--p", type=Path, required=True, help="条件 p 的 JSON 文件")
    oracle.add_argument("--q", type=Path, required=True, help="条件 q 的 JSON 文件")
    oracle.set_defaults(handler=cmd_oracle)

    parse_cmd = sub.add_parser("parse", help="规范化序数表达式")
    parse_cmd.add_argument("expr")
    parse_cmd.add_argument("--fund", type=int, help="输出极限序数的基本列第 N 项")
    parse_cmd.set_defaults(handler=cmd_parse)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        return args.handler(args)
    except OrdinalParseError as e:
        print(f"error: {e.caret()}", file=sys.stderr)
    except (PcfFlowError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
