"""Batch command-line front end.

Three subcommands: ``region`` computes and exports the outer-bound polytope
for one channel, ``classify`` reports the interference regime, and ``verify``
runs one of the batch verification suites.  Machine-readable outputs are
deterministic: the same input file and flags produce byte-identical bytes.

Exit codes: 0 success, 2 spec-file or usage error, 3 unbounded region,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .bounds import WeightedBound, active_bounds, family_bounds, grid_bounds
from .channel import ChannelSpec, FadingPmf, expect, expect_pos_diff
from .geometry import RegionPolytope, UnboundedRegionError, intersect, support
from .regimes import classify, weak_sum_capacity
from .verification import SUITES, verify_inclusions, verify_montecarlo

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNBOUNDED = 3
EXIT_VERIFY = 4

_LINK_KEYS = ("n11", "n12", "n21", "n22")


class SpecFileError(ValueError):
    """A channel spec file could not be interpreted."""


def _rational(raw, where):
    # bool is an int subclass, so it has to be rejected first
    if isinstance(raw, bool):
        raise SpecFileError(f"{where}: expected a rational, got a boolean")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, Fraction):
        return raw
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecFileError(f"{where}: not a rational: {raw!r}") from exc
    raise SpecFileError(f"{where}: expected a rational, got {type(raw).__name__}")


@dataclass(frozen=True)
class ChannelSpecFile:
    """A parsed channel description: level count, label, and the four pmfs."""

    q: int
    label: str
    spec: ChannelSpec

    @classmethod
    def parse(cls, text: str, default_label: str = "channel") -> "ChannelSpecFile":
        # parse_float=Fraction turns JSON decimals into exact rationals by
        # reading their digits literally, so 0.9 means exactly 9/10
        try:
            doc = json.loads(text, parse_float=Fraction)
        except json.JSONDecodeError as exc:
            raise SpecFileError(
                f"line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from exc
        if not isinstance(doc, dict):
            raise SpecFileError("top level must be a JSON object")
        unknown = sorted(set(doc) - {"q", "label", *_LINK_KEYS})
        if unknown:
            raise SpecFileError("unknown keys: " + ", ".join(unknown))
        if "q" not in doc:
            raise SpecFileError("missing key: q")
        q = doc["q"]
        if isinstance(q, bool) or not isinstance(q, int):
            raise SpecFileError("q must be an integer")
        if q < 0:
            raise SpecFileError("q must be nonnegative")
        label = doc.get("label", default_label)
        if not isinstance(label, str):
            raise SpecFileError("label must be a string")
        pmfs = {}
        for key in _LINK_KEYS:
            if key not in doc:
                raise SpecFileError(f"missing key: {key}")
            entries = doc[key]
            if not isinstance(entries, list):
                raise SpecFileError(f"{key}: expected an array of {q + 1} masses")
            if len(entries) != q + 1:
                raise SpecFileError(
                    f"{key}: expected {q + 1} masses for q={q}, got {len(entries)}"
                )
            masses = [
                _rational(raw, f"{key}[{i}]") for i, raw in enumerate(entries)
            ]
            try:
                pmfs[key] = FadingPmf(masses)
            except ValueError as exc:
                raise SpecFileError(f"{key}: {exc}") from exc
        spec = ChannelSpec(
            n11=pmfs["n11"], n12=pmfs["n12"], n21=pmfs["n21"], n22=pmfs["n22"]
        )
        return cls(q=q, label=label, spec=spec)


def load_spec_file(path) -> ChannelSpecFile:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise SpecFileError(f"cannot read {p}: {exc}") from exc
    return ChannelSpecFile.parse(text, default_label=p.stem)


def _all_bounds(spec: ChannelSpec) -> list:
    out = []
    for user in (1, 2):
        for family in ("a", "b", "c"):
            out.extend(family_bounds(spec, user, family))
    return out


def _constraint_entry(bound: WeightedBound) -> dict:
    plane = bound.halfplane()
    return {
        "family": bound.family,
        "omega": str(bound.omega),
        "mu": None if bound.mu is None else str(bound.mu),
        "a": plane.a,
        "b": plane.b,
        "c": plane.c,
    }


def region_document(spec_file: ChannelSpecFile, mode: str, grid_steps: int) -> dict:
    spec = spec_file.spec
    if mode == "grid":
        bounds = grid_bounds(spec, grid_steps)
    else:
        bounds = _all_bounds(spec)
    region = intersect([b.halfplane() for b in bounds])
    active = active_bounds(bounds, region)
    return {
        "label": spec_file.label,
        "q": spec_file.q,
        "mode": mode,
        "vertices": [[str(r1), str(r2)] for r1, r2 in region.vertices],
        "constraints": [_constraint_entry(b) for b in active],
    }


def classify_document(spec_file: ChannelSpecFile) -> dict:
    spec = spec_file.spec
    report = classify(spec)
    region = intersect([b.halfplane() for b in _all_bounds(spec)])
    exact = report.regime in ("strong", "weak")
    doc = {
        "label": spec_file.label,
        "q": spec_file.q,
        "regime": report.regime,
        "conditions": {
            "strong": {"user1": list(report.strong_1), "user2": list(report.strong_2)},
            "weak": {"user1": list(report.weak_1), "user2": list(report.weak_2)},
            "moderate": {
                "user1": list(report.moderate_1),
                "user2": list(report.moderate_2),
            },
        },
        "conjecture_precondition": report.conjecture_precondition,
        "region_status": "capacity" if exact else "outer bound (tightness open)",
        "vertices": [[str(r1), str(r2)] for r1, r2 in region.vertices],
    }
    if report.regime == "weak":
        doc["sum_capacity"] = str(weak_sum_capacity(spec))
    elif report.regime == "strong":
        doc["sum_capacity"] = str(support(region, Fraction(1), Fraction(1)))
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_csv(region: RegionPolytope) -> str:
    lines = ["R1,R2"]
    for r1, r2 in region.vertices:
        lines.append(f"{r1},{r2}")
    return "\n".join(lines) + "\n"


def _svg_header(width: int, height: int) -> str:
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )


def render_svg(spec_file: ChannelSpecFile, region: RegionPolytope) -> str:
    """Static polygon plot; weak channels get Fig-style annotations."""
    ml, mt, inner = 64, 20, 400
    width, height = ml + inner + 24, mt + inner + 56
    xmax = max((float(v[0]) for v in region.vertices), default=0.0)
    ymax = max((float(v[1]) for v in region.vertices), default=0.0)
    xmax = (xmax or 1.0) * 1.1
    ymax = (ymax or 1.0) * 1.1

    def fx(r) -> float:
        return ml + float(r) / xmax * inner

    def fy(r) -> float:
        return mt + inner - float(r) / ymax * inner

    parts = [_svg_header(width, height)]
    parts.append(
        f'<rect x="{ml}" y="{mt}" width="{inner}" height="{inner}" '
        'fill="white" stroke="black" stroke-width="1"/>'
    )
    pts = " ".join(f"{fx(r1):.2f},{fy(r2):.2f}" for r1, r2 in region.vertices)
    parts.append(
        f'<polygon points="{pts}" fill="#c8d8ee" fill-opacity="0.7" '
        'stroke="#204a87" stroke-width="2"/>'
    )
    for r1, r2 in region.vertices:
        parts.append(
            f'<circle cx="{fx(r1):.2f}" cy="{fy(r2):.2f}" r="3" fill="#204a87"/>'
        )
    xticks = sorted({v[0] for v in region.vertices})
    yticks = sorted({v[1] for v in region.vertices})
    for t in xticks:
        parts.append(
            f'<text x="{fx(t):.2f}" y="{mt + inner + 16}" font-size="11" '
            f'text-anchor="middle">{t}</text>'
        )
    for t in yticks:
        parts.append(
            f'<text x="{ml - 6}" y="{fy(t) + 4:.2f}" font-size="11" '
            f'text-anchor="end">{t}</text>'
        )
    parts.append(
        f'<text x="{ml + inner / 2:.2f}" y="{mt + inner + 40}" font-size="13" '
        'text-anchor="middle">R1 (bits/channel use)</text>'
    )
    parts.append(
        f'<text x="16" y="{mt + inner / 2:.2f}" font-size="13" '
        f'text-anchor="middle" transform="rotate(-90 16 {mt + inner / 2:.2f})">'
        "R2 (bits/channel use)</text>"
    )

    spec = spec_file.spec
    if classify(spec).regime == "weak":
        c_sum = weak_sum_capacity(spec)
        # dashed sum-capacity line R1 + R2 = C_sum, clipped to the plot box
        lo = max(0.0, float(c_sum) - ymax)
        hi = min(xmax, float(c_sum))
        parts.append(
            f'<line x1="{fx(lo):.2f}" y1="{fy(float(c_sum) - lo):.2f}" '
            f'x2="{fx(hi):.2f}" y2="{fy(float(c_sum) - hi):.2f}" '
            'stroke="#a40000" stroke-width="1.5" stroke-dasharray="6,4"/>'
        )
        face = [v for v in region.vertices if v[0] + v[1] == c_sum]
        if face:
            a_pt = max(face, key=lambda v: v[0])
            b_pt = min(face, key=lambda v: v[0])
            parts.append(
                f'<circle cx="{fx(a_pt[0]):.2f}" cy="{fy(a_pt[1]):.2f}" r="4" fill="#a40000"/>'
            )
            parts.append(
                f'<text x="{fx(a_pt[0]) + 8:.2f}" y="{fy(a_pt[1]) - 6:.2f}" '
                'font-size="12" fill="#a40000">A</text>'
            )
            if b_pt != a_pt:
                parts.append(
                    f'<circle cx="{fx(b_pt[0]):.2f}" cy="{fy(b_pt[1]):.2f}" r="4" fill="#a40000"/>'
                )
                parts.append(
                    f'<text x="{fx(b_pt[0]) + 8:.2f}" y="{fy(b_pt[1]) - 6:.2f}" '
                    'font-size="12" fill="#a40000">B</text>'
                )
        star = (expect(spec.n11), expect_pos_diff(spec.n21, spec.n11))
        if region.contains(star):
            parts.append(
                f'<text x="{fx(star[0]):.2f}" y="{fy(star[1]) + 5:.2f}" font-size="16" '
                'text-anchor="middle" fill="#a40000">&#9733;</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_region(args) -> int:
    try:
        spec_file = load_spec_file(args.spec)
    except SpecFileError as exc:
        print(f"error: {args.spec}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        doc = region_document(spec_file, args.mode, args.grid_steps)
        if args.format == "json":
            text = render_json(doc)
        else:
            region = RegionPolytope.from_vertices(
                [(Fraction(a), Fraction(b)) for a, b in doc["vertices"]]
            )
            if args.format == "csv":
                text = render_csv(region)
            else:
                text = render_svg(spec_file, region)
    except UnboundedRegionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNBOUNDED
    _emit(text, args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        spec_file = load_spec_file(args.spec)
    except SpecFileError as exc:
        print(f"error: {args.spec}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        doc = classify_document(spec_file)
    except UnboundedRegionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNBOUNDED
    _emit(render_json(doc), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "montecarlo":
        result = verify_montecarlo(samples=args.samples, seed=args.seed)
    elif args.suite == "inclusions":
        result = verify_inclusions(seed=args.seed)
    else:
        result = SUITES[args.suite]()
    print(result.render())
    return EXIT_OK if result.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="layercap",
        description="Outer bounds and regime reports for two-user layered "
        "erasure interference channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    region = sub.add_parser("region", help="compute the outer-bound polytope")
    region.add_argument("--spec", required=True, help="channel spec file (JSON)")
    region.add_argument("--out", default=None, help="output path (default stdout)")
    region.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    region.add_argument("--mode", choices=("exact", "grid"), default="exact")
    region.add_argument(
        "--grid-steps", type=int, default=256, dest="grid_steps",
        help="weight-grid resolution for --mode grid",
    )
    region.set_defaults(func=cmd_region)

    cls = sub.add_parser("classify", help="report the interference regime")
    cls.add_argument("--spec", required=True, help="channel spec file (JSON)")
    cls.add_argument("--out", default=None, help="output path (default stdout)")
    cls.set_defaults(func=cmd_classify)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument(
        "suite", choices=("deterministic", "coupling", "montecarlo", "inclusions")
    )
    verify.add_argument("--samples", type=int, default=10 ** 6)
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
