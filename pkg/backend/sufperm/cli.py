"""
sufperm 명령행 인터페이스

출력은 한 줄 평문 (순열: 공백 구분, 단어: 소문자, Parikh: 쉼표 구분).
종료 코드: 0 성공, 1 도메인 오류, 2 사용법 오류.
"""
import argparse
import os
import sys
from typing import Iterable, List, Optional

from sufperm.combinatorics.characterize import (
    is_suffix_array,
    is_suffix_array_parikh,
    min_alphabet,
    recover_word_sa,
)
from sufperm.combinatorics.enumeration import (
    count_suffix_arrays,
    count_words,
    count_words_full_alphabet,
    gen_one_orbit,
    gen_parikh,
    gen_suffix_arrays,
)
from sufperm.combinatorics.linking import as_linking, phi, unphi
from sufperm.combinatorics.mid_sentinel import (
    is_ascending_to_max,
    is_mid_sentinel_sa,
    is_non_nesting,
    mid_sentinel_sa,
    recover_binary_word,
)
from sufperm.combinatorics.perm import Permutation, parse_permutation
from sufperm.combinatorics.strings import (
    SENTINEL_CHAR,
    SentinelWord,
    bw_array,
    parse_parikh,
    parse_sentinel_word,
    parse_word,
    suffix_array,
    suffix_array_sentinel,
)
from sufperm.core.config import settings
from sufperm.core.logging import app_logger as logger
from sufperm.core.logging import setup_logging
from sufperm.services.verify_service import VerificationRunner


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return value


def _perm_arg(args: argparse.Namespace) -> Permutation:
    # "5 2 4 1 3" 한 인자 또는 5 2 4 1 3 여러 인자 모두 허용
    return parse_permutation(" ".join(args.perm))


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _stream(lines: Iterable[object]) -> int:
    for line in lines:
        print(line, flush=True)
    return 0


# ── handlers ─────────────────────────────────────────────────────────────────

def cmd_sa(args) -> int:
    if args.word.endswith(SENTINEL_CHAR):
        sa = suffix_array_sentinel(parse_sentinel_word(args.word, args.alphabet_size))
    elif args.sentinel:
        sw = SentinelWord(base=parse_word(args.word, args.alphabet_size), sentinel_rank=1)
        sa = suffix_array_sentinel(sw)
    else:
        sa = suffix_array(parse_word(args.word, args.alphabet_size))
    print(sa)
    return 0


def cmd_bwa(args) -> int:
    print(bw_array(parse_word(args.word, args.alphabet_size)))
    return 0


def cmd_phi(args) -> int:
    print(phi(_perm_arg(args)))
    return 0


def cmd_unphi(args) -> int:
    print(unphi(as_linking(_perm_arg(args)), args.first))
    return 0


def cmd_check(args) -> int:
    p = _perm_arg(args)
    if args.parikh is not None:
        print(_yes_no(is_suffix_array_parikh(p, parse_parikh(args.parikh))))
    else:
        print(_yes_no(is_suffix_array(p, args.k)))
        print(f"min-alphabet={min_alphabet(p)}")
    return 0


def cmd_recover(args) -> int:
    print(recover_word_sa(_perm_arg(args), parse_parikh(args.parikh)))
    return 0


def cmd_count_words(args) -> int:
    print(count_words(_perm_arg(args), args.k))
    return 0


def cmd_count_surjective(args) -> int:
    print(count_words_full_alphabet(_perm_arg(args), args.k))
    return 0


def cmd_count_arrays(args) -> int:
    print(count_suffix_arrays(args.n, args.k))
    return 0


def cmd_enumerate_one_orbit(args) -> int:
    return _stream(gen_one_orbit(args.n))


def cmd_enumerate_suffix_arrays(args) -> int:
    return _stream(gen_suffix_arrays(args.n, args.k))


def cmd_enumerate_parikh(args) -> int:
    return _stream(gen_parikh(_perm_arg(args), args.k))


def cmd_mid_check(args) -> int:
    p = _perm_arg(args)
    print(f"descent={_yes_no(is_mid_sentinel_sa(p))}")
    print(f"ascending-to-max={_yes_no(is_ascending_to_max(p))}")
    print(f"non-nesting={_yes_no(is_non_nesting(p))}")
    return 0


def cmd_mid_sa(args) -> int:
    print(mid_sentinel_sa(parse_word(args.word)))
    return 0


def cmd_mid_recover(args) -> int:
    print(recover_binary_word(_perm_arg(args)))
    return 0


def cmd_verify(args) -> int:
    report = VerificationRunner(args.n, args.k, workers=args.workers).run()
    for check in report.checks:
        print(check.summary_line(), flush=True)
    total = len(report.checks)
    if report.passed:
        print(f"all {total} checks passed (n={args.n}, k={args.k})")
        return 0
    print(f"{report.failed_count} of {total} checks failed (n={args.n}, k={args.k})")
    return 1


def cmd_serve(args) -> int:
    import uvicorn

    logger.info(f"Starting server on {args.host}:{args.port}")
    uvicorn.run("sufperm.api.app:app", host=args.host, port=args.port)
    return 0


# ── parser ───────────────────────────────────────────────────────────────────

def _add_perm(parser: argparse.ArgumentParser):
    parser.add_argument("perm", nargs="+", metavar="PERM",
                        help='permutation as 1-based values, e.g. "5 2 4 1 3"')


def _add_word(parser: argparse.ArgumentParser, alphabet: bool = True):
    parser.add_argument("word", metavar="WORD", help="lowercase word, 'a' = smallest letter")
    if alphabet:
        parser.add_argument("--alphabet-size", type=_positive_int, default=None,
                            help="alphabet size (default: largest letter used)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sufperm",
        description="suffix arrays, BW-arrays and linking permutations")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log to stderr (-v: INFO, -vv: DEBUG)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sa", help="suffix array of a word")
    _add_word(p)
    p.add_argument("--sentinel", action="store_true",
                   help="suffix array of word# with # smallest (also: trailing '#')")
    p.set_defaults(handler=cmd_sa)

    p = sub.add_parser("bwa", help="BW-array of a primitive word")
    _add_word(p)
    p.set_defaults(handler=cmd_bwa)

    p = sub.add_parser("phi", help="linking permutation")
    _add_perm(p)
    p.set_defaults(handler=cmd_phi)

    p = sub.add_parser("unphi", help="reconstruct a permutation from its linking permutation")
    p.add_argument("--first", type=int, required=True, help="first value of the result")
    _add_perm(p)
    p.set_defaults(handler=cmd_unphi)

    p = sub.add_parser("check", help="is PERM a suffix array?")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--k", type=_positive_int, help="alphabet size")
    mode.add_argument("--parikh", help="Parikh vector, e.g. 2,3")
    _add_perm(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("recover", help="the unique word with this suffix array and Parikh vector")
    p.add_argument("--parikh", required=True, help="Parikh vector, e.g. 2,3")
    _add_perm(p)
    p.set_defaults(handler=cmd_recover)

    count = sub.add_parser("count", help="exact counts").add_subparsers(dest="what", required=True)
    p = count.add_parser("words", help="words having PERM as suffix array")
    p.add_argument("--k", type=_positive_int, required=True)
    _add_perm(p)
    p.set_defaults(handler=cmd_count_words)
    p = count.add_parser("surjective", help="words using every letter having PERM as suffix array")
    p.add_argument("--k", type=_positive_int, required=True)
    _add_perm(p)
    p.set_defaults(handler=cmd_count_surjective)
    p = count.add_parser("arrays", help="distinct suffix arrays of words of length n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.set_defaults(handler=cmd_count_arrays)

    enum = sub.add_parser("enumerate", help="streaming enumeration").add_subparsers(dest="what", required=True)
    p = enum.add_parser("one-orbit", help="all one-orbit permutations of [1,n]")
    p.add_argument("--n", type=_positive_int, required=True)
    p.set_defaults(handler=cmd_enumerate_one_orbit)
    p = enum.add_parser("suffix-arrays", help="all suffix arrays of words of length n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.set_defaults(handler=cmd_enumerate_suffix_arrays)
    p = enum.add_parser("parikh", help="Parikh vectors of the words having PERM as suffix array")
    p.add_argument("--k", type=_positive_int, required=True)
    _add_perm(p)
    p.set_defaults(handler=cmd_enumerate_parikh)

    mid = sub.add_parser("mid-sentinel", aliases=["he"],
                         help="binary words with a < # < b").add_subparsers(dest="what", required=True)
    p = mid.add_parser("check", help="descent, ascending-to-max and non-nesting conditions")
    _add_perm(p)
    p.set_defaults(handler=cmd_mid_check)
    p = mid.add_parser("sa", help="suffix array of word# under a < # < b")
    _add_word(p, alphabet=False)
    p.set_defaults(handler=cmd_mid_sa)
    p = mid.add_parser("recover", help="the unique binary word with this suffix array")
    _add_perm(p)
    p.set_defaults(handler=cmd_mid_recover)

    p = sub.add_parser("verify", help="cross-check everything against brute-force oracles")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--workers", type=_positive_int, default=settings.VERIFY_WORKERS,
                   help="processes for word censuses")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default=settings.HOST)
    p.add_argument("--port", type=_positive_int, default=settings.PORT)
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        setup_logging(level="DEBUG" if args.verbose > 1 else "INFO")
    try:
        return args.handler(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # 파이프가 닫힌 뒤의 flush 오류 억제
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
