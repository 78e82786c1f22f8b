"""
Command line interface.

Exit status: 0 success, 1 a verification check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .determinant import knot_determinant
from .diagram import DiagramError, KnotDiagram, mirror, parse_pd, reidemeister_3
from .mapcore import CombMap, MapError, subgraph_profile
from .quasitrees import (
    DisconnectedMapError,
    brt_polynomial,
    format_poly,
    quasi_tree_polynomial,
    two_variable_q,
)
from .ribbon import A, B, build_ribbon_graph, kauffman_state, turaev_genus
from . import tables

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def diagram_report(diagram: KnotDiagram, marker: str = A, jobs: int = 1) -> dict:
    """Every number the ``q`` command prints, in machine-output key order."""
    m = build_ribbon_graph(diagram, marker)
    prof = subgraph_profile(m, range(m.edge_count))
    q = quasi_tree_polynomial(m, jobs=jobs)
    return {
        "name": diagram.name,
        "crossings": diagram.crossing_count,
        "s_a": kauffman_state(diagram, A).circle_count,
        "s_b": kauffman_state(diagram, B).circle_count,
        "turaev_genus": turaev_genus(diagram),
        "map": {"v": m.vertex_count, "e": m.edge_count, "f": prof.f, "g": prof.g},
        "q": list(q.coefficients),
        "det": knot_determinant(diagram),
        "q_at_minus_1": q(-1),
    }


def _dump(doc) -> str:
    return json.dumps(doc, separators=(", ", ": "))


def _read_diagram(path) -> KnotDiagram:
    try:
        return tables.read_pd_file(path)[0]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except DiagramError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_q(args) -> int:
    d = _read_diagram(args.file)
    marker = B if args.all_b else A
    rep = diagram_report(d, marker, jobs=args.jobs)
    if args.format == "json":
        print(_dump(rep))
        return EXIT_OK
    mp = rep["map"]
    print(f"diagram       {rep['name']} ({rep['crossings']} crossings)")
    print(f"s_A, s_B      {rep['s_a']}, {rep['s_b']}")
    print(f"Turaev genus  {rep['turaev_genus']}")
    print(f"all-{marker} map     V={mp['v']} E={mp['e']} f={mp['f']} g={mp['g']}")
    print(f"q(t)          {format_poly(rep['q'], 't')}")
    print(f"q(-1)         {rep['q_at_minus_1']}")
    print(f"determinant   {rep['det']}")
    return EXIT_OK


def cmd_r3(args) -> int:
    d = _read_diagram(args.file)
    try:
        out = reidemeister_3(d, args.face)
    except DiagramError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        print(_dump({"name": d.name, "face": args.face, "pd": [list(x) for x in out.crossings],
                     "turaev_genus": turaev_genus(out)}))
    else:
        print(out.to_text())
    return EXIT_OK


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def counterexample_checks(directory=None) -> tuple[list[Check], dict]:
    atlas = tables.load_fixture(tables.KNOTATLAS, directory)
    face = tables.r3_face(tables.KNOTATLAS, directory)
    moved = reidemeister_3(atlas, face)
    scape = tables.load_fixture(tables.KNOTSCAPE, directory)

    q_moved = quasi_tree_polynomial(build_ribbon_graph(moved, A))
    q_scape = quasi_tree_polynomial(build_ribbon_graph(scape, A))
    det_moved, det_scape = knot_determinant(moved), knot_determinant(scape)
    checks = [
        Check("Knot Atlas diagram: Turaev genus", 2, turaev_genus(atlas)),
        Check(f"after R3 at face {face}: Turaev genus", 1, turaev_genus(moved)),
        Check("KnotScape diagram: Turaev genus", 1, turaev_genus(scape)),
        Check("after R3: q(t) coefficients", (21, 6), q_moved.coefficients),
        Check("KnotScape: q(t) coefficients", (9, 24), q_scape.coefficients),
        Check("after R3: |q(-1)|", 15, abs(q_moved(-1))),
        Check("KnotScape: |q(-1)|", 15, abs(q_scape(-1))),
        Check("after R3: Goeritz determinant equals |q(-1)|", abs(q_moved(-1)), det_moved),
        Check("KnotScape: Goeritz determinant equals |q(-1)|", abs(q_scape(-1)), det_scape),
        Check("polynomials differ", True, q_moved != q_scape),
    ]
    # The two sources draw mirror images; comparing within one chirality too.
    q_scape_mirror = quasi_tree_polynomial(build_ribbon_graph(mirror(scape), A))
    extra = {
        "q_after_r3": q_moved,
        "q_knotscape": q_scape,
        "q_knotscape_mirror": q_scape_mirror,
        "writhes": (moved.writhe, scape.writhe),
    }
    return checks, extra


def cmd_counterexample(args) -> int:
    try:
        checks, extra = counterexample_checks(args.fixtures)
    except (OSError, KeyError, ValueError, DiagramError, MapError) as exc:
        print(f"FAIL  fixtures unusable: {exc}")
        return EXIT_FAIL
    for c in checks:
        status = "ok  " if c.ok else "FAIL"
        line = f"{status}  {c.name}: {c.actual}"
        if not c.ok:
            line += f" (expected {c.expected})"
        print(line)
    print(f"q(Knot Atlas after R3) = {extra['q_after_r3']}")
    print(f"q(KnotScape)           = {extra['q_knotscape']}")
    print(f"q(KnotScape, mirrored) = {extra['q_knotscape_mirror']}")
    if all(c.ok for c in checks):
        print("verdict: both diagrams have Turaev genus 1 and different q; "
              "q is NOT a knot invariant")
        return EXIT_OK
    print("verdict: counterexample NOT reproduced")
    return EXIT_FAIL


def _verify_row(row):
    lineno, name, pd, det = row
    try:
        d = parse_pd(pd, name=name)
        q = quasi_tree_polynomial(build_ribbon_graph(d, A))
        goeritz = knot_determinant(d)
    except (DiagramError, MapError) as exc:
        return lineno, name, "ERROR", str(exc)
    value = abs(q(-1))
    ok = value == goeritz and (det is None or det == goeritz)
    msg = f"|q(-1)| = {value}, det = {goeritz}"
    if det is not None:
        msg += f", table det = {det}"
    return lineno, name, "PASS" if ok else "FAIL", msg


def read_table(text: str):
    """Rows ``(line, name, pd, det or None)`` plus ``(line, message)`` for bad rows."""
    rows, bad = [], []
    reader = csv.reader(io.StringIO(text))
    header = None
    for record in reader:
        lineno = reader.line_num
        if not record or not "".join(record).strip() or record[0].lstrip().startswith("#"):
            continue
        if header is None:
            header = [h.strip().lower() for h in record]
            if header[:2] != ["name", "pd"]:
                bad.append((lineno, "header must start with 'name,pd'"))
                return rows, bad
            continue
        if len(record) < 2:
            bad.append((lineno, f"expected 2 or 3 fields, got {len(record)}"))
            continue
        if len(record) > 3:
            # unquoted PD code: its commas split it over several fields
            tail = record[-1].strip()
            closes_crossing = tail.endswith((")", "]"))
            record = [record[0], ",".join(record[1:-1] if not closes_crossing else record[1:])] + (
                [] if closes_crossing else [tail])
        det = None
        if len(record) == 3 and record[2].strip():
            try:
                det = int(record[2])
            except ValueError:
                bad.append((lineno, f"determinant {record[2]!r} is not an integer"))
                continue
        rows.append((lineno, record[0].strip(), record[1], det))
    return rows, bad


def cmd_verify(args) -> int:
    try:
        text = Path(args.table).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.table}: {exc.strerror or exc}") from None
    rows, bad = read_table(text)
    if args.jobs > 1 and len(rows) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_row, rows))
    else:
        results = [_verify_row(r) for r in rows]

    for lineno, message in bad:
        results.append((lineno, "?", "ERROR", message))
    results.sort(key=lambda r: r[0])
    counts = {"PASS": 0, "FAIL": 0, "ERROR": 0}
    for lineno, name, status, msg in results:
        counts[status] += 1
        print(f"{status:5} {name}: {msg}" if status != "ERROR" else f"ERROR line {lineno}: {msg}")
    total = counts["PASS"] + counts["FAIL"]
    print(f"{total} rows: {counts['PASS']} pass, {counts['FAIL']} fail, {counts['ERROR']} unreadable")
    if counts["ERROR"] or total == 0:
        return EXIT_INPUT
    return EXIT_FAIL if counts["FAIL"] else EXIT_OK


def _format_two_variable(tq) -> str:
    terms = []
    for (g, y), c in sorted(tq.items()):
        mono = "".join(v if e == 1 else f"{v}^{e}" for v, e in (("t", g), ("Y", y)) if e)
        terms.append(mono if mono and c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


def cmd_brt(args) -> int:
    try:
        m = CombMap.from_text(Path(args.mapfile).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.mapfile}: {exc.strerror or exc}") from None
    except MapError as exc:
        raise InputError(f"{args.mapfile}: {exc}") from None
    C = brt_polynomial(m)
    try:
        tq = two_variable_q(m)
    except DisconnectedMapError:
        tq = None
    if args.format == "json":
        doc = {"C": C.to_machine()}
        if tq is not None:
            doc["q_tY"] = [[c, g, y] for (g, y), c in tq.items()]
        print(_dump(doc))
        return EXIT_OK
    print(f"C(X,Y,Z) = {C}")
    if tq is not None:
        print(f"q(t,Y)   = {_format_two_variable(tq)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quasitree", description=(
        "Quasi-tree polynomials of all-A ribbon graphs of knot diagrams."))
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("q", help="Turaev genus, ribbon graph statistics and q(t) of a PD file")
    q.add_argument("file")
    q.add_argument("--all-b", action="store_true", help="use the all-B state instead")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=cmd_q)

    r3 = sub.add_parser("r3", help="apply a Reidemeister III move at a triangular face")
    r3.add_argument("file")
    r3.add_argument("--face", type=int, required=True)
    r3.add_argument("--format", choices=("text", "json"), default="text")
    r3.set_defaults(func=cmd_r3)

    ce = sub.add_parser("counterexample", help="the two 8_21 diagrams with different q")
    ce.add_argument("--fixtures", default=None, help="directory holding the 8_21 PD files")
    ce.set_defaults(func=cmd_counterexample)

    v = sub.add_parser("verify", help="check |q(-1)| against the Goeritz determinant for a CSV table")
    v.add_argument("table")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("brt", help="Bollobas-Riordan-Tutte polynomial of a map file")
    b.add_argument("mapfile")
    b.add_argument("--format", choices=("text", "json"), default="text")
    b.set_defaults(func=cmd_brt)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DisconnectedMapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
