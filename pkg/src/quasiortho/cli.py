"""Command-line front end.

    quasiortho gen --n 8 --seed 1 [--a 7 --b 13 --m 4 --poly 0x19] [--format json|dense]
    quasiortho invert DOC.json [-o OUT]
    quasiortho verify DOC.json
    quasiortho search --min 8 --max 256 [--format tsv|csv]
    quasiortho render DOC.json OUT.ppm
    quasiortho bench --n 256 --reps 20

Exit status: 0 success or PASS, 1 verification FAIL, 2 usage, parse or
parameter errors.
"""

from __future__ import annotations

import argparse
import secrets
import sys
from pathlib import Path

from .bench import run_bench
from .document import BINARY, MatrixDocument, render
from .errors import QuasiOrthoError
from .gf2m import make_field
from .latin import supports_to_dense
from .oracle import is_orthogonal
from .orthogen import DEFAULT_ITERATIONS, GeneratorConfig, random_orthogonal_binary_matrix, search_table
from .quasi import quasi_inverse, substitute, verify_quasi_inverse

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int(text: str) -> int:
    """Decimal or 0x-prefixed hex."""
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _read_doc(path: str) -> MatrixDocument:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return MatrixDocument.loads(text)


def _write(data: str | bytes, output: str | None) -> None:
    if output is None or output == "-":
        if isinstance(data, bytes):
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        else:
            sys.stdout.write(data)
    elif isinstance(data, bytes):
        Path(output).write_bytes(data)
    else:
        Path(output).write_text(data)


def cmd_gen(args: argparse.Namespace) -> int:
    quasi_args = (args.a, args.b, args.m, args.poly)
    if any(v is not None for v in quasi_args) and None in quasi_args:
        raise QuasiOrthoError("--a, --b, --m and --poly must be given together")
    seed = args.seed if args.seed is not None else secrets.randbits(63)
    P = random_orthogonal_binary_matrix(GeneratorConfig(args.n, args.iterations, seed))
    if args.a is None:
        doc = MatrixDocument.from_supports(P, seed=seed)
    else:
        field = make_field(args.m, args.poly)
        doc = MatrixDocument.from_quasi(substitute(P, args.a, args.b, field), seed=seed)
    _write(doc.dumps() if args.format == "json" else doc.dense_text(), args.output)
    return EXIT_OK


def cmd_invert(args: argparse.Namespace) -> int:
    doc = _read_doc(args.input)
    if doc.kind == BINARY:
        out = MatrixDocument.from_supports(doc.supports().transpose(), seed=doc.seed)
    else:
        Q = quasi_inverse(doc.to_quasi())
        out = MatrixDocument.from_quasi(Q, seed=doc.seed, inverse=not doc.inverse)
    _write(out.dumps(), args.output)
    return EXIT_OK


def verify_document(doc: MatrixDocument) -> bool:
    if doc.kind == BINARY:
        return is_orthogonal(supports_to_dense(doc.supports()))
    Q = doc.to_quasi()
    return verify_quasi_inverse(Q, quasi_inverse(Q))


def cmd_verify(args: argparse.Namespace) -> int:
    doc = _read_doc(args.input)
    ok = verify_document(doc)
    what = "P @ P^T == I over F2" if doc.kind == BINARY else f"P_ab @ P^T_cd == I over GF(2^{doc.field_m})"
    print(f"{'PASS' if ok else 'FAIL'}: n={doc.n} {what}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_search(args: argparse.Namespace) -> int:
    sep = "," if args.format == "csv" else "\t"
    rows = search_table(args.min, args.max)
    _write("".join(sep.join(map(str, t)) + "\n" for t in rows), args.output)
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    _write(render(_read_doc(args.input)), args.output)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    report = run_bench(args.n, args.reps, args.iterations, args.seed)
    print(report.format(), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quasiortho", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random orthogonal (quasi-)binary matrix")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=_int)
    g.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS)
    g.add_argument("--a", type=_int)
    g.add_argument("--b", type=_int)
    g.add_argument("--m", type=int)
    g.add_argument("--poly", type=_int, help="modulus bitmask, e.g. 0x19 for x^4+x^3+1")
    g.add_argument("--format", choices=["json", "dense"], default="json")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    i = sub.add_parser("invert", help="write the quasi-inverse of a document")
    i.add_argument("input")
    i.add_argument("-o", "--output")
    i.set_defaults(func=cmd_invert)

    v = sub.add_parser("verify", help="check orthogonality / quasi-inverse identity")
    v.add_argument("input")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="list (n, k, rot) triplets")
    s.add_argument("--min", type=int, default=8)
    s.add_argument("--max", type=int, default=256)
    s.add_argument("--format", choices=["tsv", "csv"], default="tsv")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("render", help="export PBM (binary) or PPM (quasi-binary)")
    r.add_argument("input")
    r.add_argument("output")
    r.set_defaults(func=cmd_render)

    b = sub.add_parser("bench", help="time support-set vs matmul generation")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--reps", type=int, default=20)
    b.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS)
    b.add_argument("--seed", type=_int, default=0)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QuasiOrthoError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
