"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 indeterminate
(an interval where --exact was demanded, no normal-bundle rule, a = 1).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .anchors import ANCHORS
from .classification import ClassificationRecord, InvalidQuery, classify_fano, classify_mukai
from .cohomology import cohomology
from .divisors import DivisorClass, HirzebruchSurface, canonical
from .extendability import (
    AlphaBound,
    NoRuleApplies,
    NotVeryAmple,
    PreconditionFailed,
    UnsupportedA,
    beta,
    carpet_verdict,
    gamma,
    h0_N_minus_k_bound,
)
from .les import Interval, tangent_cohomology
from .report import build_report
from .scan import COMPUTATIONS, ManifestError, ScanManifest, run_scan

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_INDETERMINATE = 0, 1, 2, 3


def _anchors(names: Sequence[str]) -> str:
    seen = list(dict.fromkeys(names))
    return "  [" + ", ".join(seen) + "]"


def parse_twist(spec: str, h: DivisorClass, surface: HirzebruchSurface) -> DivisorClass:
    """Twist for T_Y: "-H", "-H+K", "-2H", "-kH+K" or an explicit class "x,y"."""
    spec = spec.replace(" ", "")
    m = re.fullmatch(r"(-?\d*)H(\+K)?", spec)
    if m:
        coef = m.group(1)
        k = {"": 1, "-": -1}.get(coef)
        k = int(coef) if k is None else k
        d = k * h
        return d + canonical(surface) if m.group(2) else d
    m = re.fullmatch(r"(-?\d+),(-?\d+)", spec)
    if m:
        return DivisorClass(int(m.group(1)), int(m.group(2)))
    raise argparse.ArgumentTypeError(f"bad twist {spec!r}: use -H, -H+K, -kH, -kH+K or x,y")


def _range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+)(?:\.\.(-?\d+))?", text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: use N or LO..HI")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return lo, hi


def _interval_json(v: Interval | int) -> int | dict[str, int]:
    if isinstance(v, Interval):
        return v.lo if v.is_point else {"min": v.lo, "max": v.hi}
    return v


def _emit(args: argparse.Namespace, text: str, doc: dict) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------

def cmd_coh(args: argparse.Namespace) -> int:
    s = HirzebruchSurface(args.e)
    h = DivisorClass(args.a, args.b)
    doc = {"surface": {"e": args.e}, "divisor": {"a": args.a, "b": args.b}}
    if args.tangent is None:
        dims = cohomology(h, s)
        doc.update(h=list(dims), exact=True, anchors=["leray", "relative-duality"])
        _emit(args, f"h = {dims}" + _anchors(doc["anchors"]), doc)
        return EXIT_OK
    twist = parse_twist(args.tangent, h, s)
    res = tangent_cohomology(twist, s)
    doc.update(
        bundle=f"T_Y({twist})",
        h=[_interval_json(res.h0), _interval_json(res.h1), _interval_json(res.h2)],
        exact=res.exact,
        anchors=["tangent-filtration", "leray"],
    )
    _emit(args, f"h = {res}" + _anchors(doc["anchors"]), doc)
    if args.exact and not res.exact:
        return EXIT_INDETERMINATE
    return EXIT_OK


def _bound_doc(bound: AlphaBound) -> dict:
    p = bound.params
    return {
        "surface": {"e": p.e},
        "divisor": {"a": p.a, "b": p.b},
        "estimator": bound.estimator,
        "upper": bound.value,
        "estimate": _interval_json(bound.estimate),
        "r": p.r,
        "g": p.g,
        "M": p.M,
        "terms": bound.terms,
        "anchors": list(bound.anchors),
    }


def _terms(bound: AlphaBound) -> str:
    return "".join(
        f"\n  {k} {v}" if v.startswith(("<=", "=")) else f"\n  {k} = {v}"
        for k, v in bound.terms.items()
    )


def _require_exact(args: argparse.Namespace, bound: AlphaBound) -> int:
    return EXIT_INDETERMINATE if args.exact and not bound.exact else EXIT_OK


def cmd_alpha(args: argparse.Namespace) -> int:
    bound, verdict = carpet_verdict(args.a, args.b, args.e)
    p = bound.params
    anchors = [*bound.anchors, "zak-lvovsky", "semicontinuity"]
    doc = _bound_doc(bound)
    doc.update(verdict=verdict.headline(), reasons=list(verdict.reasons), anchors=list(dict.fromkeys(anchors)))
    text = f"α ≤ {bound.value}; (r,g)=({p.r},{p.g}); {verdict.headline()}" + _anchors(anchors)
    if args.verbose:
        text += _terms(bound)
        text += "".join(f"\n  {r}" for r in verdict.reasons)
    _emit(args, text, doc)
    return _require_exact(args, bound)


def cmd_beta(args: argparse.Namespace) -> int:
    bound = beta(args.a, args.b, args.e)
    p = bound.params
    text = f"β = {bound.estimate}; α ≤ {bound.value}; (r,g)=({p.r},{p.g})" + _anchors(bound.anchors)
    if args.verbose:
        text += _terms(bound)
    _emit(args, text, _bound_doc(bound))
    return _require_exact(args, bound)


def cmd_gamma(args: argparse.Namespace) -> int:
    bound = gamma(args.b, args.e)
    p = bound.params
    extra = f"; special correction +{bound.special_correction}" if bound.special_correction else ""
    text = f"γ = {bound.estimate}; α ≤ {bound.value}; (r,g)=({p.r},{p.g}){extra}" + _anchors(bound.anchors)
    if args.verbose:
        text += _terms(bound)
    _emit(args, text, _bound_doc(bound))
    return _require_exact(args, bound)


def cmd_normal_bound(args: argparse.Namespace) -> int:
    v = h0_N_minus_k_bound(args.a, args.b, args.e, args.k)
    anchors = ["normal-minus-k-bound", "vanish-tangent"]
    doc = {"surface": {"e": args.e}, "divisor": {"a": args.a, "b": args.b}, "k": args.k,
           "upper": _interval_json(v), "exact": v.is_point, "anchors": anchors}
    _emit(args, f"h0(N(-{args.k}H)) ≤ {v.hi}" + ("" if v.is_point else f" (estimate {v})")
          + _anchors(anchors), doc)
    return EXIT_INDETERMINATE if args.exact and not v.is_point else EXIT_OK


def _record_text(rec: ClassificationRecord, triple: bool) -> str:
    if rec.status == "empty":
        head = f"EMPTY ({rec.reason})"
    elif rec.status == "nonempty-irreducible":
        head = "nonempty irreducible"
        if rec.tangent_dim_at_cone is not None:
            cone = "triple cone" if triple else "cone"
            head += f"; dim T at {cone} = {rec.tangent_dim_at_cone}"
        if rec.alpha is not None:
            head += f"; α = {rec.alpha}"
        if rec.uniqueness_flag:
            head += "; unique Fano threefold through a general K3 section"
    else:
        head = f"out of scope ({rec.reason})"
    lines = [head + _anchors(rec.anchors)]
    lines += [f"  note: {n}" for n in rec.notes]
    return "\n".join(lines)


def cmd_classify(args: argparse.Namespace) -> int:
    if args.kind == "fano":
        rec = classify_fano((args.r, args.g))
    else:
        if args.n is None:
            raise InvalidQuery("classify mukai needs --n")
        rec = classify_mukai((args.n, args.r, args.g))
    doc = {
        "kind": args.kind,
        "n": args.n if args.kind == "mukai" else 3,
        "r": args.r,
        "g": args.g,
        "status": rec.status,
        "reason": rec.reason,
        "alpha": rec.alpha,
        "alpha_bound_only": rec.alpha_bound_only,
        "tangent_dim_at_cone": rec.tangent_dim_at_cone,
        "uniqueness_flag": rec.uniqueness_flag,
        "notes": list(rec.notes),
        "anchors": list(rec.anchors),
    }
    _emit(args, _record_text(rec, args.kind == "mukai"), doc)
    return EXIT_INDETERMINATE if rec.status == "out-of-paper-scope" else EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    if args.manifest:
        manifest = ScanManifest.from_file(args.manifest)
        if args.out:
            manifest = ScanManifest(manifest.a, manifest.b, manifest.e, manifest.computations,
                                    manifest.fmt, args.out, manifest.k)
    else:
        missing = [n for n in ("a", "b", "e") if getattr(args, n) is None]
        if missing:
            raise ManifestError(f"scan needs --{', --'.join(missing)} or --manifest")
        comps = tuple(c.strip() for c in args.compute.split(",") if c.strip())
        manifest = ScanManifest(args.a, args.b, args.e, comps, args.format or "csv", args.out, args.k)
    text = run_scan(manifest, args.workers)
    if not manifest.out:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify_paper(args: argparse.Namespace) -> int:
    report = build_report()
    out = report.json() if args.format == "json" else report.text()
    if args.out:
        from .scan import write_atomic

        write_atomic(args.out, out)
    sys.stdout.write(out)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_anchors(args: argparse.Namespace) -> int:
    for name, text in ANCHORS.items():
        print(f"{name}: {text}")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carpet-ext",
        description="Cohomology on Hirzebruch surfaces and extendability of K3 carpets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, fmt: bool = True) -> None:
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--exact", action="store_true", help="exit 3 unless the result is exact")

    def point(p: argparse.ArgumentParser, a: bool = True) -> None:
        p.add_argument("--e", type=int, required=True)
        if a:
            p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("coh", help="h^i of aC0+bf, or of T_Y twisted by a divisor")
    point(p)
    p.add_argument("--tangent", metavar="TWIST", help="twist of T_Y: -H, -H+K, -kH, -kH+K or x,y")
    common(p)
    p.set_defaults(func=cmd_coh)

    for name, fn, helptext in (
        ("alpha", cmd_alpha, "certified alpha bound and extendability verdict"),
        ("beta", cmd_beta, "the five-term beta estimator"),
    ):
        p = sub.add_parser(name, help=helptext)
        point(p)
        p.add_argument("-v", "--verbose", action="store_true")
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("gamma", help="the a = 2 gamma estimator")
    point(p, a=False)
    p.add_argument("-v", "--verbose", action="store_true")
    common(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("normal-bound", help="upper bound for h^0(N(-kH)) on the carpet, k >= 2")
    point(p)
    p.add_argument("--k", type=int, default=2)
    common(p)
    p.set_defaults(func=cmd_normal_bound)

    p = sub.add_parser("classify", help="Fano threefolds or Mukai varieties of index r, genus g")
    p.add_argument("kind", choices=("fano", "mukai"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, help="dimension of the Mukai variety")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="evaluate a grid of (e, a, b)")
    p.add_argument("--e", type=_range, metavar="LO..HI")
    p.add_argument("--a", type=_range, metavar="LO..HI")
    p.add_argument("--b", type=_range, metavar="LO..HI")
    p.add_argument("--k", type=int, default=2, help="twist for the normal-k column")
    p.add_argument("--compute", default="cohomology",
                   help=f"comma-separated subset of {','.join(COMPUTATIONS)}")
    p.add_argument("--format", choices=("text", "json", "csv"))
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--manifest", metavar="PATH", help="JSON manifest instead of flags")
    p.add_argument("--workers", type=int, help="worker processes (default: $CARPET_EXT_THREADS)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-paper", help="run every reproduction check and print the report")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("anchors", help="list the anchor ids used in verdicts")
    p.set_defaults(func=cmd_anchors)
    return parser


def _join_tangent(argv: list[str]) -> list[str]:
    # "--tangent -H" would otherwise read -H as an option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--tangent":
            nxt = next(it, None)
            out.append("--tangent" if nxt is None else f"--tangent={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = _join_tangent(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NoRuleApplies, UnsupportedA) as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except (NotVeryAmple, PreconditionFailed, InvalidQuery, ManifestError,
            argparse.ArgumentTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
