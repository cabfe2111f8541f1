"""Command-line surface: ingestion, verification, searches, rewrites,
exports, and the end-to-end pipeline.

Every invocation prints a machine-readable run report: line-oriented
``key value`` pairs under a versioned header.  Everything above the
``unstable`` marker is a pure function of the arguments and input bytes
(byte-identical across runs); timing lines live below it.  Exit codes:
0 success, 1 input error, 2 proven-negative outcome (modulo reject,
exhausted search, arithmetic infeasibility, failed verification),
3 budget exceeded.

Artifacts (packings, provenance, factors, cycles) pass between invocations
as files, so pipelines are scriptable and each stage is independently
testable.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from pathlib import Path

from .budget import DEFAULT_BUDGET, SearchBudget
from .codec import CodecError, decode_planar_code, encode_planar_code
from .cycles import (
    CycleFactor,
    NotDivisibleError,
    find_cycle_factor_5_6,
    find_hamiltonian_cycle,
    split_cycle_into_paths,
)
from .errors import (
    ArithmeticInfeasibleError,
    BudgetExceededError,
    ExhaustedError,
    StarpackError,
)
from .export import Annotations, export_dot, export_svg
from .fixtures import fixture_dodecahedron
from .graphs import EmbeddedCubicGraph, GraphError, face_census, verify_fullerene
from .layout import layout_tutte
from .matching import find_perfect_matching, find_pseudo_matching
from .packing import (
    InvalidInputError,
    SearchOutcome,
    Star,
    StarPacking,
    classify_packing,
    find_balanced_p0_packing,
    find_star_packings,
)
from .transforms import (
    SemiStarProvenance,
    StarTransformProvenance,
    TransformError,
    chamfer,
    extract_cycle_factor_from_provenance,
    extract_subdivided_star_packing,
    provenance_from_text,
    provenance_to_text,
    semi_star_transform,
    star_transform,
)
from .verifiers import CertificateError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NEGATIVE = 2
EXIT_BUDGET = 3


class Report:
    """Run report: stable key/value section, then timings."""

    def __init__(self, command: str):
        self._stable: list[str] = [f"command {command}"]
        self._unstable: list[str] = []
        self._t0 = time.perf_counter()

    def add(self, key: str, value) -> None:
        self._stable.append(f"{key} {value}")

    def add_time(self, key: str = "time-ms") -> None:
        self._unstable.append(f"{key} {(time.perf_counter() - self._t0) * 1e3:.2f}")

    def render(self, exit_code: int) -> str:
        lines = ["starpack-report 1"]
        lines.extend(self._stable)
        lines.append(f"exit-code {exit_code}")
        lines.append("unstable")
        lines.extend(self._unstable)
        return "\n".join(lines) + "\n"


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _load_graphs(source: str, report: Report) -> list[EmbeddedCubicGraph]:
    """Input is a planar_code file or the literal fixture:c20."""
    report.add("input", source)
    if source == "fixture:c20":
        g = fixture_dodecahedron()
        report.add("input-sha256", _sha256(encode_planar_code(g)))
        return [g]
    if source.startswith("fixture:"):
        raise StarpackError(f"unknown fixture {source!r} (only fixture:c20 exists)")
    data = Path(source).read_bytes()
    report.add("input-sha256", _sha256(data))
    return decode_planar_code(data)


def _first_graph(source: str, report: Report) -> EmbeddedCubicGraph:
    graphs = _load_graphs(source, report)
    if not graphs:
        raise StarpackError(f"{source}: stream contains no graphs")
    if len(graphs) > 1:
        report.add("note", f"stream has {len(graphs)} graphs; using the first")
    report.add("graph-vertices", graphs[0].vertex_count)
    return graphs[0]


def _parse_budget(text: str | None) -> SearchBudget:
    if text is None:
        return DEFAULT_BUDGET
    try:
        seconds, nodes = text.split(",")
        return SearchBudget(node_limit=int(nodes), time_limit=float(seconds))
    except ValueError as exc:
        raise StarpackError(
            f"--budget must be <seconds>,<nodes>, got {text!r}"
        ) from exc


def _write_output(path: str, data: bytes, report: Report, key: str = "output-file") -> None:
    Path(path).write_bytes(data)
    report.add(key, f"{path} sha256 {_sha256(data)}")


# ---------------------------------------------------------------------------
# Certificate file formats
# ---------------------------------------------------------------------------


def packing_to_text(packing: StarPacking, n: int) -> str:
    lines = ["starpack-packing 1", f"graph-vertices {n}"]
    for s in packing.stars:
        lines.append(f"star {s.center} {s.leaves[0]} {s.leaves[1]} {s.leaves[2]}")
    return "\n".join(lines) + "\n"


def packing_from_text(text: str) -> StarPacking:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != ["starpack-packing", "1"]:
        raise StarpackError("not a starpack-packing file")
    stars = []
    try:
        for parts in lines[1:]:
            if parts[0] == "star":
                c, l1, l2, l3 = map(int, parts[1:5])
                stars.append(Star(center=c, leaves=(l1, l2, l3)))
    except ValueError as exc:
        raise StarpackError(f"malformed packing line: {exc}") from exc
    return StarPacking(stars=tuple(sorted(stars, key=lambda s: s.center)))


def factor_to_text(factor: CycleFactor, n: int) -> str:
    lines = ["starpack-cyclefactor 1", f"graph-vertices {n}"]
    for cycle in factor.cycles:
        lines.append("cycle " + " ".join(map(str, cycle)))
    return "\n".join(lines) + "\n"


def factor_from_text(text: str) -> CycleFactor:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != ["starpack-cyclefactor", "1"]:
        raise StarpackError("not a starpack-cyclefactor file")
    try:
        cycles = tuple(
            tuple(int(x) for x in parts[1:])
            for parts in lines[1:]
            if parts[0] == "cycle"
        )
    except ValueError as exc:
        raise StarpackError(f"malformed cycle line: {exc}") from exc
    return CycleFactor(cycles=cycles)


# ---------------------------------------------------------------------------
# Subcommand handlers (return exit code)
# ---------------------------------------------------------------------------


def _cmd_verify(args, report: Report) -> int:
    graphs = _load_graphs(args.input, report)
    report.add("graph-count", len(graphs))
    all_pass = True
    for i, g in enumerate(graphs):
        rep = verify_fullerene(g)
        census = face_census(g)
        report.add(f"graph-{i}-vertices", g.vertex_count)
        report.add(f"graph-{i}-edges", g.edge_count)
        report.add(f"graph-{i}-axioms", rep.summary())
        report.add(f"graph-{i}-fullerene", "yes" if rep.passed else "no")
        for axiom, witness in sorted(rep.witnesses.items()):
            report.add(f"graph-{i}-witness-{axiom}", witness)
        report.add(
            f"graph-{i}-census",
            " ".join(f"{s}:{c}" for s, c in sorted(census.counts.items())),
        )
        all_pass = all_pass and rep.passed
    report.add("status", "ok" if all_pass else "not-fullerene")
    return EXIT_OK if all_pass else EXIT_NEGATIVE


def _cmd_faces(args, report: Report) -> int:
    g = _first_graph(args.input, report)
    census = face_census(g)
    report.add("faces", census.face_count)
    report.add(
        "census", " ".join(f"{s}:{c}" for s, c in sorted(census.counts.items()))
    )
    report.add("euler-characteristic", census.euler_characteristic)
    report.add("status", "ok" if census.euler_ok else "genus-nonzero")
    return EXIT_OK if census.euler_ok else EXIT_NEGATIVE


def _cmd_pack_stars(args, report: Report) -> int:
    g = _first_graph(args.input, report)
    budget = _parse_budget(args.budget)
    result = find_star_packings(g, limit=args.limit, budget=budget)
    report.add("status", result.outcome.value)
    report.add("packings-found", len(result.packings))
    report.add("search-nodes", result.nodes)
    for i, packing in enumerate(result.packings):
        cls = classify_packing(g, packing)
        report.add(f"packing-{i}-centers", " ".join(map(str, packing.centers)))
        report.add(f"packing-{i}-p0", "yes" if cls.is_p0 else "no")
        report.add(f"packing-{i}-balanced", "yes" if cls.is_balanced else "no")
    if args.save and result.packings:
        _write_output(
            args.save,
            packing_to_text(result.packings[0], g.vertex_count).encode(),
            report,
        )
    if result.outcome == SearchOutcome.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    if result.proven_empty:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_classify(args, report: Report) -> int:
    g = _first_graph(args.input, report)
    packing = packing_from_text(Path(args.packing).read_text())
    cls = classify_packing(g, packing)
    report.add("stars", len(packing.stars))
    report.add("p0", "yes" if cls.is_p0 else "no")
    report.add("balanced", "yes" if cls.is_balanced else "no")
    report.add(
        "hexagon-center-histogram",
        " ".join(f"{k}:{v}" for k, v in sorted(cls.hexagon_center_histogram.items())),
    )
    profile_counts: dict[tuple[int, int, int], int] = {}
    for sizes in cls.center_face_profile.values():
        profile_counts[sizes] = profile_counts.get(sizes, 0) + 1
    report.add(
        "center-face-profiles",
        " ".join(
            f"{'-'.join(map(str, k))}:{v}" for k, v in sorted(profile_counts.items())
        ),
    )
    report.add("status", "ok")
    return EXIT_OK


def _resolve_packing(g, args, report: Report) -> StarPacking:
    if args.packing:
        return packing_from_text(Path(args.packing).read_text())
    budget = _parse_budget(args.budget)
    packing = find_balanced_p0_packing(g, budget=budget)
    if packing is None:
        raise ExhaustedError("no balanced P0 star packing exists for this input")
    report.add("packing-searched", "yes")
    return packing


def _cmd_transform(args, report: Report) -> int:
    g = _first_graph(args.input, report)
    report.add("kind", args.kind)
    if args.kind == "chamfer":
        out = chamfer(g)
        prov_text = None
    else:
        packing = _resolve_packing(g, args, report)
        if args.kind == "star":
            out, prov = star_transform(g, packing)
        else:
            out, prov = semi_star_transform(g, packing)
        prov_text = provenance_to_text(prov)
    report.add("output-vertices", out.vertex_count)
    report.add("output-edges", out.edge_count)
    report.add(
        "output-census",
        " ".join(f"{s}:{c}" for s, c in sorted(out.census.counts.items())),
    )
    if args.out:
        _write_output(args.out, encode_planar_code(out), report)
    if prov_text is not None and args.provenance:
        _write_output(args.provenance, prov_text.encode(), report, key="provenance-file")
    report.add("status", "ok")
    return EXIT_OK


def _cmd_factor56(args, report: Report) -> int:
    g = _first_graph(args.input, report)
    hint = None
    if args.hint:
        hint = factor_from_text(Path(args.hint).read_text())
        report.add("hint", "verified")
    factor = find_cycle_factor_5_6(g, hint=hint, budget=_parse_budget(args.budget))
    counts = factor.size_counts()
    report.add("cycles", len(factor.cycles))
    report.add("cycle-sizes", " ".join(f"{k}:{v}" for k, v in sorted(counts.items())))
    if args.save:
        _write_output(args.save, factor_to_text(factor, g.vertex_count).encode(), report)
    report.add("status", "ok")
    return EXIT_OK


def _cmd_pseudo(args, report: Report) -> int:
    g = _first_graph(args.input, report)
    pm = find_pseudo_matching(g, args.stars, budget=_parse_budget(args.budget))
    report.add("stars", len(pm.stars))
    report.add("pairs", len(pm.pairs))
    if args.save:
        lines = ["starpack-pseudomatching 1", f"graph-vertices {g.vertex_count}"]
        for u, v in pm.pairs:
            lines.append(f"pair {u} {v}")
        for s in pm.stars:
            lines.append(f"star {s.center} {s.leaves[0]} {s.leaves[1]} {s.leaves[2]}")
        _write_output(args.save, ("\n".join(lines) + "\n").encode(), report)
    report.add("status", "ok")
    return EXIT_OK


def _cmd_hamilton(args, report: Report) -> int:
    g = _first_graph(args.input, report)
    cycle = find_hamiltonian_cycle(g, budget=_parse_budget(args.budget))
    report.add("cycle-length", len(cycle))
    lines = ["starpack-cycle 1", f"graph-vertices {g.vertex_count}"]
    lines.append("cycle " + " ".join(map(str, cycle)))
    if args.split:
        packing = split_cycle_into_paths(cycle, args.split)
        report.add("paths", len(packing.paths))
        report.add("path-order", packing.k)
        for path in packing.paths:
            lines.append("path " + " ".join(map(str, path)))
    if args.save:
        _write_output(args.save, ("\n".join(lines) + "\n").encode(), report)
    report.add("status", "ok")
    return EXIT_OK


def _cmd_extract(args, report: Report) -> int:
    g = _first_graph(args.input, report)
    prov = provenance_from_text(Path(args.provenance).read_text())
    if args.what == "factor56":
        if not isinstance(prov, StarTransformProvenance):
            raise StarpackError("factor56 extraction needs star-rewrite provenance")
        factor = extract_cycle_factor_from_provenance(g, prov)
        counts = factor.size_counts()
        report.add("cycles", len(factor.cycles))
        report.add(
            "cycle-sizes", " ".join(f"{k}:{v}" for k, v in sorted(counts.items()))
        )
        if args.save:
            _write_output(
                args.save, factor_to_text(factor, g.vertex_count).encode(), report
            )
    else:
        if not isinstance(prov, SemiStarProvenance):
            raise StarpackError("spider extraction needs semi-star provenance")
        spiders = extract_subdivided_star_packing(g, prov)
        report.add("spiders", len(spiders.spiders))
        if args.save:
            lines = ["starpack-spiders 1", f"graph-vertices {g.vertex_count}"]
            for sp in spiders.spiders:
                legs = " ".join(f"{m} {l}" for m, l in sp.legs)
                lines.append(f"spider {sp.center} {legs}")
            _write_output(args.save, ("\n".join(lines) + "\n").encode(), report)
    report.add("status", "ok")
    return EXIT_OK


def _cmd_export(args, report: Report) -> int:
    g = _first_graph(args.input, report)
    annotations = None
    if args.packing:
        packing = packing_from_text(Path(args.packing).read_text())
        annotations = Annotations.build(
            vertex_classes={"center": packing.centers},
            edge_classes={"star-edge": packing.star_edges},
        )
    if args.format == "planarcode":
        data = encode_planar_code(g)
    elif args.format == "dot":
        data = export_dot(g, annotations).encode()
    else:
        outer = max(g.faces, key=lambda f: (f.size, -min(f.boundary)))
        layout = layout_tutte(g, outer)
        data = export_svg(g, layout, annotations).encode()
    _write_output(args.out, data, report)
    report.add("status", "ok")
    return EXIT_OK


def _cmd_pipeline(args, report: Report) -> int:
    """fixture -> chamfer -> pack-stars -> star/semi-star -> extractors."""
    if args.target != "c80":
        raise StarpackError(f"unknown pipeline {args.target!r} (available: c80)")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    budget = _parse_budget(args.budget)

    c20 = fixture_dodecahedron()
    report.add("stage-c20-vertices", c20.vertex_count)
    report.add("stage-c20-fullerene", "yes" if verify_fullerene(c20).passed else "no")

    c80 = chamfer(c20)
    report.add("stage-c80-vertices", c80.vertex_count)
    report.add(
        "stage-c80-census",
        " ".join(f"{s}:{c}" for s, c in sorted(c80.census.counts.items())),
    )
    _write_output(str(out_dir / "c80.plc"), encode_planar_code(c80), report)

    packing = find_balanced_p0_packing(c80, budget=budget)
    if packing is None:
        raise ExhaustedError("pipeline: no balanced P0 packing on the chamfered graph")
    cls = classify_packing(c80, packing)
    report.add("stage-packing-stars", len(packing.stars))
    report.add("stage-packing-p0", "yes" if cls.is_p0 else "no")
    report.add("stage-packing-balanced", "yes" if cls.is_balanced else "no")
    _write_output(
        str(out_dir / "c80-packing.txt"),
        packing_to_text(packing, c80.vertex_count).encode(),
        report,
    )

    f180, prov = star_transform(c80, packing)
    report.add("stage-star-vertices", f180.vertex_count)
    report.add("stage-star-edges", f180.edge_count)
    report.add(
        "stage-star-census",
        " ".join(f"{s}:{c}" for s, c in sorted(f180.census.counts.items())),
    )
    _write_output(str(out_dir / "f180.plc"), encode_planar_code(f180), report)
    _write_output(
        str(out_dir / "f180-provenance.txt"), provenance_to_text(prov).encode(), report
    )

    factor = extract_cycle_factor_from_provenance(f180, prov)
    counts = factor.size_counts()
    report.add(
        "stage-factor56", " ".join(f"{k}:{v}" for k, v in sorted(counts.items()))
    )
    _write_output(
        str(out_dir / "f180-factor56.txt"),
        factor_to_text(factor, f180.vertex_count).encode(),
        report,
    )

    f140, sprov = semi_star_transform(c80, packing)
    report.add("stage-semistar-vertices", f140.vertex_count)
    report.add("stage-semistar-hexagons", f140.census.hexagons)
    report.add("stage-semistar-chords", len(sprov.chords))
    _write_output(str(out_dir / "f140.plc"), encode_planar_code(f140), report)
    _write_output(
        str(out_dir / "f140-provenance.txt"),
        provenance_to_text(sprov).encode(),
        report,
    )

    spiders = extract_subdivided_star_packing(f140, sprov)
    report.add("stage-spiders", len(spiders.spiders))
    lines = ["starpack-spiders 1", f"graph-vertices {f140.vertex_count}"]
    for sp in spiders.spiders:
        legs = " ".join(f"{m} {l}" for m, l in sp.legs)
        lines.append(f"spider {sp.center} {legs}")
    _write_output(
        str(out_dir / "f140-spiders.txt"), ("\n".join(lines) + "\n").encode(), report
    )

    for name, g in (("c20", c20), ("c80", c80), ("f180", f180), ("f140", f140)):
        matching = find_perfect_matching(g)
        report.add(f"stage-matching-{name}", len(matching))

    report.add("status", "ok")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing and entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starpack",
        description="Fullerene graph toolkit: packings, rewrites, verifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument("--budget", metavar="SECONDS,NODES", default=None)

    p = sub.add_parser("verify", help="run the fullerene axioms on every graph")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("faces", help="trace faces and print the census")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_faces)

    p = sub.add_parser("pack-stars", help="search perfect star packings")
    p.add_argument("input")
    p.add_argument("--limit", type=int, default=1)
    p.add_argument("--save", metavar="FILE")
    add_budget(p)
    p.set_defaults(handler=_cmd_pack_stars)

    p = sub.add_parser("classify", help="classify a packing (P0, balance)")
    p.add_argument("input")
    p.add_argument("packing")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("transform", help="apply a rewrite")
    p.add_argument("kind", choices=("star", "semistar", "chamfer"))
    p.add_argument("input")
    p.add_argument("--packing", metavar="FILE", help="packing file; searched if omitted")
    p.add_argument("--out", metavar="FILE", help="write the result as planar_code")
    p.add_argument("--provenance", metavar="FILE")
    add_budget(p)
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("factor56", help="find or verify a {C5,C6}-factor")
    p.add_argument("input")
    p.add_argument("--hint", metavar="FILE", help="cycle factor file to verify")
    p.add_argument("--save", metavar="FILE")
    add_budget(p)
    p.set_defaults(handler=_cmd_factor56)

    p = sub.add_parser("pseudo", help="perfect pseudo matching with K stars")
    p.add_argument("input")
    p.add_argument("--stars", type=int, required=True, metavar="K")
    p.add_argument("--save", metavar="FILE")
    add_budget(p)
    p.set_defaults(handler=_cmd_pseudo)

    p = sub.add_parser("hamilton", help="find a Hamiltonian cycle")
    p.add_argument("input")
    p.add_argument("--split", type=int, metavar="K", help="also split into K-vertex paths")
    p.add_argument("--save", metavar="FILE")
    add_budget(p)
    p.set_defaults(handler=_cmd_hamilton)

    p = sub.add_parser("extract", help="run a constructive extractor on saved provenance")
    p.add_argument("what", choices=("factor56", "spiders"))
    p.add_argument("input")
    p.add_argument("provenance")
    p.add_argument("--save", metavar="FILE")
    p.set_defaults(handler=_cmd_extract)

    p = sub.add_parser("export", help="write DOT, SVG, or planar_code")
    p.add_argument("format", choices=("dot", "svg", "planarcode"))
    p.add_argument("input")
    p.add_argument("-o", "--out", required=True, metavar="FILE")
    p.add_argument("--packing", metavar="FILE", help="annotate centers and star edges")
    p.set_defaults(handler=_cmd_export)

    p = sub.add_parser("pipeline", help="run the full construction chain")
    p.add_argument("target", help="pipeline name (c80)")
    p.add_argument("--out", default="pipeline-out", metavar="DIR")
    add_budget(p)
    p.set_defaults(handler=_cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = _build_parser().parse_args(raw)
    except SystemExit as exc:
        if exc.code in (0, None):
            return EXIT_OK  # --help and friends
        report = Report("(unparsed)")
        report.add("args", " ".join(raw))
        report.add("status", "input-error")
        report.add("error", "unrecognized arguments (usage printed above)")
        report.add_time()
        sys.stdout.write(report.render(EXIT_INPUT))
        return EXIT_INPUT
    report = Report(args.command)
    report.add("args", " ".join(raw))
    try:
        code = args.handler(args, report)
    except BudgetExceededError as exc:
        report.add("status", "budget-exceeded")
        report.add("error", str(exc))
        code = EXIT_BUDGET
    except (ExhaustedError, ArithmeticInfeasibleError) as exc:
        report.add(
            "status",
            "exhausted" if isinstance(exc, ExhaustedError) else "arithmetic-infeasible",
        )
        report.add("error", str(exc))
        code = EXIT_NEGATIVE
    except (CodecError, GraphError, TransformError, CertificateError,
            InvalidInputError, NotDivisibleError, StarpackError) as exc:
        report.add("status", "input-error")
        report.add("error", f"{type(exc).__name__}: {exc}")
        code = EXIT_INPUT
    except (OSError, ValueError) as exc:
        report.add("status", "input-error")
        report.add("error", f"{type(exc).__name__}: {exc}")
        code = EXIT_INPUT
    report.add_time()
    sys.stdout.write(report.render(code))
    return code


if __name__ == "__main__":
    sys.exit(main())
