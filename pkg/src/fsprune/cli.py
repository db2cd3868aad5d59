"""Command line front end.

Exit status: 0 on success, 2 for unreadable input, 3 for input that parses
but breaks an invariant (not a permutation, tap out of range, invalid QPP).
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import textio
from .fsp_engine import DummyMask, FspConfig, stream, stream_with_dummies
from .perm_core import DomainError, Permutation, apply, invert, perm_to_trans, trans_to_perm
from .prune_grow import grow, prune
from .qpp import QppSpec, prune_qpp_lifted, pruned_qpp, qpp_generate, qpp_validate
from .spread import fold_profile, spread
from .trials import PRNG_NAME, run_all

EXIT_PARSE = 2
EXIT_DOMAIN = 3

OUTDIR_ENV = "FSPRUNE_OUTDIR"

PAPER_QPP = dict(length=2048, linear=63, quadratic=128)


def _outdir(arg: str | None) -> Path:
    path = Path(arg or os.environ.get(OUTDIR_ENV, "."))
    path.mkdir(parents=True, exist_ok=True)
    return path


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _open_in(path: str):
    return sys.stdin if path == "-" else path


def _summary(**fields) -> str:
    return " ".join(f"{k}={v}" for k, v in fields.items())


def _spec(args) -> QppSpec:
    return QppSpec(args.K, args.h, args.b, args.c)


# -- subcommands ---------------------------------------------------------


def cmd_convert(args) -> int:
    src = _open_in(args.input)
    if args.kind == "perm2taps":
        result = perm_to_trans(textio.read_permutation(src))
    elif args.kind == "taps2perm":
        result = trans_to_perm(textio.read_taps(src))
    else:
        result = invert(textio.read_permutation(src))
    _emit(textio.format_ints(result), args.output)
    return 0


def _read_symbols(binary: bool) -> list:
    if binary:
        return list(sys.stdin.buffer.read())
    return sys.stdin.read().split()


def _write_symbols(symbols: list, binary: bool) -> None:
    if binary:
        sys.stdout.buffer.write(bytes(symbols))
        sys.stdout.flush()
    else:
        sys.stdout.write(" ".join(map(str, symbols)) + "\n")


def cmd_stream(args) -> int:
    taps = textio.read_taps(args.taps)
    config = FspConfig(taps, continuous=not args.block)
    symbols = _read_symbols(args.binary)
    if args.mask:
        mask = DummyMask(textio.parse_ints(Path(args.mask).read_text()), len(taps))
        out = stream_with_dummies(config, symbols, mask)
    else:
        out, trace = stream(config, symbols, trace=args.trace)
        if trace is not None:
            sys.stderr.write(f"# delay={trace.delay}\n")
            for line in trace.lines():
                sys.stderr.write(line + "\n")
    _write_symbols(out, args.binary)
    return 0


def cmd_prune(args) -> int:
    _emit(textio.format_ints(prune(textio.read_taps(_open_in(args.input)), args.m)), args.output)
    return 0


def cmd_grow(args) -> int:
    _emit(textio.format_ints(grow(textio.read_taps(_open_in(args.input)), args.j)), args.output)
    return 0


def cmd_spread(args) -> int:
    src = _open_in(args.input)
    p = trans_to_perm(textio.read_taps(src)) if args.taps else textio.read_permutation(src)
    rep = spread(p)
    n1, n2 = rep.argmin_pair
    print(_summary(spread=rep.spread, n1=n1, n2=n2, pairs_at_min=rep.pair_count_at_min))
    return 0


def cmd_gprofile(args) -> int:
    prof = fold_profile(_spec(args), args.n)
    keep = ~prof.excluded
    _emit(textio.scatter_csv(prof.l[keep], prof.g[keep]), args.output)
    return 0


def cmd_qpp_gen(args) -> int:
    spec = _spec(args)
    validity = qpp_validate(spec)
    print(f"# {validity.case.value}: {validity.diagnostics}", file=sys.stderr)
    _emit(textio.format_ints(qpp_generate(spec)), args.out)
    return 0


def _write_scatter(outdir: Path, name: str, p: Permutation) -> Path:
    path = outdir / f"{name}.csv"
    path.write_text(textio.permutation_csv(p))
    return path


def _plot(outdir: Path, name: str, fmt: str | None, panels) -> None:
    if not fmt:
        return
    from .plotting import scatter_permutation

    scatter_permutation(
        [(title, range(1, len(p) + 1), p.map) for title, p in panels],
        outdir / f"{name}.{fmt}",
    )


def cmd_qpp_prune_lift(args) -> int:
    spec = _spec(args)
    outdir = _outdir(args.outdir)
    res = prune_qpp_lifted(spec, args.M)
    mother = qpp_generate(spec)
    _write_scatter(outdir, "mother", mother)
    _write_scatter(outdir, "pruned", res.pruned)
    _write_scatter(outdir, "lifted", res.compacted)
    (outdir / "dummy_positions.txt").write_text(textio.format_ints(res.dummy_positions))
    _plot(
        outdir,
        "prune_lift",
        args.plot,
        [("mother", mother), ("pruned", res.pruned), ("lifted", res.compacted)],
    )
    print(_summary(**res.summary()))
    return 0


def _reproduce_example() -> None:
    pi = Permutation((4, 3, 1, 2, 5))
    t2 = grow(perm_to_trans(pi), 3)
    pi2 = trans_to_perm(t2)
    s, s2 = [1, 0, 1, 1, 0], [0, 1, 0, 1, 1, 0]
    out, _ = stream(FspConfig(t2), s2)
    show = lambda seq: "".join(map(str, seq))  # noqa: E731
    print(f"pi = ({pi})  taps = ({perm_to_trans(pi)})  delay = {perm_to_trans(pi).delay}")
    print(f"pi2 = ({pi2})  taps = ({t2})")
    print(f"pi^-1 = ({invert(pi)})")
    # picture order: the first symbol out of the queue is written rightmost
    print(f"pi on {show(s)} -> emitted {show(apply(pi, s))}, as pictured {show(apply(pi, s)[::-1])}")
    print(f"pi2 on {show(s2)} -> emitted {show(out)}, as pictured {show(out[::-1])}")


def cmd_reproduce(args) -> int:
    fig = args.figure
    if fig == "example-sec2":
        _reproduce_example()
        return 0
    outdir = _outdir(args.outdir)
    if fig == "fig2":
        spec = QppSpec(**PAPER_QPP, offset=347)
        n = 1180
        prof = fold_profile(spec, n)
        keep = ~prof.excluded
        (outdir / "fig2_fold_profile.csv").write_text(textio.scatter_csv(prof.l[keep], prof.g[keep]))
        if args.plot:
            from .plotting import scatter_profile

            scatter_profile(prof.l[keep], prof.g[keep], outdir / f"fig2_fold_profile.{args.plot}",
                            f"K=2048 h=63 b=128 c=347 n={n}")
        print(_summary(figure=fig, K=2048, c=347, n=n, points=int(keep.sum()), min_g=prof.minimum()))
        return 0
    spec = QppSpec(**PAPER_QPP, offset=0)
    if fig == "fig3":
        p = pruned_qpp(spec, 10)
        _write_scatter(outdir, "fig3_pruned_M10", p)
        _plot(outdir, "fig3_pruned_M10", args.plot, [("pruned, M=10", p)])
        print(_summary(figure=fig, length=len(p), spread=spread(p).spread))
        return 0
    res = prune_qpp_lifted(spec, 500)
    if fig == "fig4":
        mother = qpp_generate(spec)
        _write_scatter(outdir, "fig4_mother", mother)
        _write_scatter(outdir, "fig4_lifted_M500", res.compacted)
        _plot(outdir, "fig4", args.plot, [("mother", mother), ("lifted, M=500", res.compacted)])
        print(_summary(figure=fig, target=res.target_length, actual=res.actual_length,
                       lifted=len(res.lifted), mother_spread=spread(mother).spread,
                       spread=res.spread_after, unlifted_spread=res.spread_before))
    else:
        _write_scatter(outdir, "fig5_lifted_M500", res.compacted)
        _plot(outdir, "fig5_lifted_M500", args.plot, [("lifted, M=500", res.compacted)])
        print(_summary(figure=fig, length=res.actual_length, spread=res.spread_after))
    return 0


def cmd_selftest(args) -> int:
    print(f"# prng={PRNG_NAME} seed={args.seed} scale={args.scale}")
    results = run_all(args.seed, args.scale)
    for r in results:
        print(r.line())
    return 0 if all(r.ok for r in results) else 1


# -- parser --------------------------------------------------------------


def _qpp_args(p: argparse.ArgumentParser, offset_default: int | None = 0) -> None:
    p.add_argument("--K", type=int, required=True, help="interleaver length")
    p.add_argument("--h", type=int, required=True, help="linear coefficient")
    p.add_argument("--b", type=int, required=True, help="quadratic coefficient")
    p.add_argument("--c", type=int, default=offset_default, help="offset (default 0)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fsprune", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="permutation <-> transposition vector, or invert")
    p.add_argument("--kind", choices=("perm2taps", "taps2perm", "invert"), required=True)
    p.add_argument("input", help="input file, '-' for stdin")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("stream", help="run symbols from stdin through the permuter")
    p.add_argument("--taps", required=True, help="transposition vector file")
    p.add_argument("--block", action="store_true", help="drain between blocks")
    p.add_argument("--binary", action="store_true", help="one byte per symbol")
    p.add_argument("--mask", help="file of one-based input positions to fill with dummies")
    p.add_argument("--trace", action="store_true", help="write the step trace to stderr")
    p.set_defaults(func=cmd_stream)

    p = sub.add_parser("prune", help="drop the first M taps")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_prune)

    p = sub.add_parser("grow", help="prepend tap J")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_grow)

    p = sub.add_parser("spread", help="spread and minimising pair of a permutation")
    p.add_argument("input")
    p.add_argument("--taps", action="store_true", help="input is a transposition vector")
    p.set_defaults(func=cmd_spread)

    p = sub.add_parser("gprofile", help="fold-distance profile g(l) of a QPP as CSV")
    _qpp_args(p)
    p.add_argument("--n", type=int, required=True, help="first tap of the inverse")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gprofile)

    q = sub.add_parser("qpp", help="quadratic permutation polynomial tools")
    qsub = q.add_subparsers(dest="qpp_command", required=True)
    p = qsub.add_parser("gen", help="write the QPP permutation")
    _qpp_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_qpp_gen)
    p = qsub.add_parser("prune-lift", help="prune by M taps and lift folded points")
    _qpp_args(p)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--outdir", help=f"output directory (default ${OUTDIR_ENV} or .)")
    p.add_argument("--plot", choices=("svg", "png"), help="also render scatter figures")
    p.set_defaults(func=cmd_qpp_prune_lift)

    p = sub.add_parser("reproduce", help="regenerate worked examples and figure data")
    p.add_argument("figure", choices=("fig2", "fig3", "fig4", "fig5", "example-sec2"))
    p.add_argument("--outdir", help=f"output directory (default ${OUTDIR_ENV} or .)")
    p.add_argument("--plot", choices=("svg", "png"), help="also render scatter figures")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("selftest", help="seeded randomized property trials")
    p.add_argument("--seed", type=int, default=20240601)
    p.add_argument("--scale", type=float, default=0.1, help="fraction of the full trial counts")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except textio.ParseError as exc:
        print(f"fsprune: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ValueError) as exc:
        print(f"fsprune: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"fsprune: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
