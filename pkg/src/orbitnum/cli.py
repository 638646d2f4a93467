"""orbitnum コマンドライン

終了コード: 0 成功、1 引数や入力の誤り、2 検証の失敗。
stdout には結果だけを出し、診断は stderr に出す。
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import NoReturn, cast

from .config import SuiteBounds, require_prime
from .errors import OrbitnumError, TableInconsistencyError
from .kostka import kostka_matrix, p_kostka, young_module_dimension
from .modular import simple_dimension
from .mullineux import mullineux_regular, mullineux_restricted
from .orbit_numbers import (
    JordanKind,
    build_tables,
    generic_jordan_type,
    m_number,
    orbit_number,
)
from .orbit_type import OrbitType, canonical_orbit_type
from .partition import (
    Partition,
    is_p_regular,
    p_adic_expansion,
    perm_module_dimension,
    specht_dimension,
)
from .serialize import (
    MATRIX_NAMES,
    MatrixName,
    dumps,
    kostka_csv,
    kostka_json,
    table_csv,
    table_json,
    write_text,
)
from .verify import SUITES, run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"整数のリストではありません: {text!r}") from None


def _partition(args: argparse.Namespace, name: str = "lam") -> Partition:
    text = getattr(args, name)
    if text is None:
        flag = "--lambda" if name == "lam" else "--mu"
        raise UsageError(f"{flag} が必要です")
    return Partition.parse(text)


def _orbit(args: argparse.Namespace, lam: Partition | None = None) -> OrbitType:
    if args.orbit is None:
        if lam is None:
            raise UsageError("--orbit が必要です")
        return canonical_orbit_type(lam, args.p)
    return OrbitType.parse(args.orbit, args.p)


def _emit(args: argparse.Namespace, text: str, data: object) -> None:
    print(dumps(data) if args.format == "json" else text)


def cmd_expand(args: argparse.Namespace) -> int:
    lam = _partition(args)
    expansion = p_adic_expansion(lam, args.p)
    _emit(
        args,
        str(expansion),
        {"lambda": str(lam), "p": args.p, "terms": [str(t) for t in expansion.terms]},
    )
    return EXIT_OK


def cmd_orbit_type(args: argparse.Namespace) -> int:
    lam = _partition(args)
    orbit = canonical_orbit_type(lam, args.p)
    _emit(args, str(orbit), {"lambda": str(lam), "p": args.p, "orbit": str(orbit)})
    return EXIT_OK


def cmd_m(args: argparse.Namespace) -> int:
    lam = _partition(args)
    orbit = _orbit(args)
    value = m_number(lam, orbit)
    _emit(args, str(value), {"lambda": str(lam), "orbit": str(orbit), "p": args.p, "m": value})
    return EXIT_OK


def cmd_y(args: argparse.Namespace) -> int:
    lam = _partition(args)
    orbit = _orbit(args, lam)
    value = orbit_number(lam, orbit, args.p)
    _emit(args, str(value), {"lambda": str(lam), "orbit": str(orbit), "p": args.p, "y": value})
    return EXIT_OK


def cmd_kostka(args: argparse.Namespace) -> int:
    if args.n is not None:
        if args.lam is not None or args.mu is not None:
            raise UsageError("--n と --lambda / --mu は同時に指定できません")
        matrix = kostka_matrix(args.n, args.p)
        if args.format == "json":
            print(dumps(kostka_json(matrix)))
        else:
            sys.stdout.write(kostka_csv(matrix))
        return EXIT_OK
    lam = _partition(args)
    mu = _partition(args, "mu")
    value = p_kostka(lam, mu, args.p)
    _emit(args, str(value), {"lambda": str(lam), "mu": str(mu), "p": args.p, "k": value})
    return EXIT_OK


def cmd_dims(args: argparse.Namespace) -> int:
    lam = _partition(args)
    dims: dict[str, int] = {
        "S": specht_dimension(lam),
        "M": perm_module_dimension(lam),
        "Y": young_module_dimension(lam, args.p),
    }
    if is_p_regular(lam, args.p):
        dims["D"] = simple_dimension(lam, args.p)
    text = "\n".join(f"{key}={value}" for key, value in dims.items())
    _emit(args, text, {"lambda": str(lam), "p": args.p, **dims})
    return EXIT_OK


def cmd_jordan(args: argparse.Namespace) -> int:
    lam = _partition(args)
    orbit = _orbit(args, lam)
    which = JordanKind(args.which)
    jordan = generic_jordan_type(lam, orbit, args.p, which)
    _emit(
        args,
        str(jordan),
        {
            "lambda": str(lam),
            "orbit": str(orbit),
            "p": args.p,
            "which": which.value,
            "ones": jordan.ones,
            "pblocks": jordan.pblocks,
            "generically_free": jordan.generically_free,
        },
    )
    return EXIT_OK


def cmd_mullineux(args: argparse.Namespace) -> int:
    lam = _partition(args)
    image = mullineux_regular(lam, args.p) if args.regular else mullineux_restricted(lam, args.p)
    _emit(args, str(image), {"lambda": str(lam), "p": args.p, "image": str(image)})
    return EXIT_OK


def cmd_tables(args: argparse.Namespace) -> int:
    if args.n is None:
        raise UsageError("--n が必要です")
    names: list[MatrixName] = []
    for token in args.emit.split(","):
        token = token.strip()
        if token not in MATRIX_NAMES:
            raise UsageError(f"--emit は M,K,Y の組み合わせです: {args.emit!r}")
        if token not in names:
            names.append(cast(MatrixName, token))
    table = build_tables(args.n, args.p, max_workers=args.workers)
    suffix = f"n{args.n}-p{args.p}"
    if args.format == "json":
        text = dumps(table_json(table, names))
        if args.out is None:
            print(text)
        else:
            write_text(Path(args.out) / f"tables-{suffix}.json", text + "\n")
        return EXIT_OK
    for k, name in enumerate(names):
        text = table_csv(table, name)
        if args.out is None:
            if k:
                print()
            sys.stdout.write(text)
        else:
            write_text(Path(args.out) / f"{name}-{suffix}.csv", text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = SUITES if args.suite in (None, "all") else tuple(args.suite.split(","))
    for name in names:
        if name not in SUITES:
            raise UsageError(f"未知のスイート: {name!r}")
    primes = _int_list(args.p_list)
    if not primes:
        raise UsageError("--p が必要です")
    for p in primes:
        require_prime(p)
    bounds: SuiteBounds = {} if args.n_max is None else {"n_max": args.n_max}
    try:
        reports = run_suites(list(names), primes, bounds, max_workers=args.workers)
    except TableInconsistencyError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    for report in reports:
        if args.format == "text":
            status = "pass" if report.passed else "FAIL"
            print(f"{report.suite} p={report.p}: {status} ({report.cases} cases)")
        else:
            print(dumps(report.to_dict(), indent=None))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbitnum", description="Orbit numbers of Young modules")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug ログを stderr に出す")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def compute(
        name: str,
        handler: Callable[[argparse.Namespace], int],
        *,
        orbit: bool = False,
        mu: bool = False,
    ) -> argparse.ArgumentParser:
        p = sub.add_parser(name)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--lambda", dest="lam")
        if mu:
            p.add_argument("--mu")
        if orbit:
            p.add_argument("--orbit", help='"1^3,2^2" または "1,1,1,2,2"')
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(handler=handler)
        return p

    compute("expand", cmd_expand)
    compute("orbit-type", cmd_orbit_type)
    compute("m", cmd_m, orbit=True)
    compute("y", cmd_y, orbit=True)
    kostka = compute("kostka", cmd_kostka, mu=True)
    kostka.add_argument("--n", type=int, help="n の p-Kostka 行列全体を出す")
    compute("dims", cmd_dims)
    jordan = compute("jordan", cmd_jordan, orbit=True)
    jordan.add_argument(
        "--which", choices=[k.value for k in JordanKind], default=JordanKind.YOUNG.value
    )
    mullineux = compute("mullineux", cmd_mullineux)
    mullineux.add_argument("--regular", action="store_true", help="p-正則版の写像を使う")

    tables = sub.add_parser("tables")
    tables.add_argument("--n", type=int)
    tables.add_argument("--p", type=int, required=True)
    tables.add_argument("--emit", default="M,K,Y")
    tables.add_argument("--format", choices=("csv", "json"), default="csv")
    tables.add_argument("--out")
    tables.add_argument("--workers", type=int)
    tables.set_defaults(handler=cmd_tables)

    verify = sub.add_parser("verify")
    verify.add_argument("--suite", help="カンマ区切り、または all")
    verify.add_argument("--p", dest="p_list", default="2")
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--format", choices=("text", "json"), default="json")
    verify.add_argument("--workers", type=int)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
    try:
        return args.handler(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TableInconsistencyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (OrbitnumError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
