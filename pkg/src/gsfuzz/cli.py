"""Structure files and the gsf command line.

File format (UTF-8, line oriented, '#' starts a comment):

    elements e a b
    gammas g
    table g
    e e e
    e a e
    e e b
    fuzzy mu e=1/2 a=3/5 b=3/5
    subset A e a
    map f -> other.gsf : e=e a=a b=b

Row i, column j of the block under ``table g`` is the product
(element_i g element_j).  Grades accept p/q or decimal literals, both parsed
exactly; fuzzy lines may omit elements, which default to grade 0.

Exit codes: 0 success, 1 --expect mismatch, 2 usage or parse error,
3 invalid structure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BadRational,
    DocumentError,
    DocumentSyntaxError,
    DuplicateName,
    GsfError,
    InvalidAlpha,
    MissingTable,
    UnknownPredicateName,
)
from .fuzzy import FuzzySubset
from .predicates import PredicateVerdict, Witness, check_by_name
from .search import (
    GeneratorConfig,
    enumerate_crisp,
    find_witness,
    fixtures,
    generate_structures,
    sample_eq_bi_ideals,
)
from .structure import GammaSemigroup, classify_structure, classify_subset, validate_structure
from .theorems import (
    report_bi_ideal_equivalences,
    report_level_characterization,
    report_product_characterization,
    report_regular_intra_characterization,
    report_regularity_characterization,
    report_subsemigroup_equivalences,
)


@dataclass
class MapSpec:
    target: str
    assignments: dict


@dataclass
class StructureDocument:
    """Parsed form of a .gsf file."""

    elements: list = field(default_factory=list)
    gammas: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)    # gamma name -> row-major names
    fuzzy: dict = field(default_factory=dict)     # name -> {element: Fraction}
    subsets: dict = field(default_factory=dict)   # name -> [element names]
    maps: dict = field(default_factory=dict)      # name -> MapSpec

    def to_structure(self) -> GammaSemigroup:
        eidx = {name: i for i, name in enumerate(self.elements)}
        cube = [
            [
                [eidx[self.tables[g][x][y]] for y in range(len(self.elements))]
                for g in self.gammas
            ]
            for x in range(len(self.elements))
        ]
        return validate_structure(self.elements, self.gammas, cube)

    def fuzzy_subset(self, structure: GammaSemigroup, name: str) -> FuzzySubset:
        if name not in self.fuzzy:
            raise DocumentError(f"no fuzzy subset named {name!r}")
        return FuzzySubset.from_mapping(structure, self.fuzzy[name])


def _grade_token(line_no: int, token: str) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise BadRational(f"malformed grade {token!r}", line_no) from None
    if not 0 <= value <= 1:
        raise BadRational(f"grade {token} outside [0,1]", line_no)
    return value


def parse(text: str) -> StructureDocument:
    """Parse a structure document; errors carry the offending line number."""
    doc = StructureDocument()
    pending_table: str | None = None
    pending_rows: list = []

    def close_table(line_no: int) -> None:
        nonlocal pending_table, pending_rows
        if pending_table is None:
            return
        if len(pending_rows) != len(doc.elements):
            raise MissingTable(
                f"table {pending_table!r} has {len(pending_rows)} rows, "
                f"expected {len(doc.elements)}",
                line_no,
            )
        doc.tables[pending_table] = [list(r) for r in pending_rows]
        pending_table, pending_rows = None, []

    lines = text.splitlines()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]

        if pending_table is not None and head not in (
            "elements", "gammas", "table", "fuzzy", "subset", "map",
        ):
            if len(tokens) != len(doc.elements):
                raise MissingTable(
                    f"table row has {len(tokens)} entries, expected {len(doc.elements)}",
                    line_no,
                )
            for name in tokens:
                if name not in doc.elements:
                    raise DocumentSyntaxError(f"unknown element {name!r}", line_no)
            pending_rows.append(tokens)
            if len(pending_rows) == len(doc.elements):
                close_table(line_no)
            continue
        close_table(line_no)

        if head == "elements":
            if doc.elements:
                raise DuplicateName("elements already declared", line_no)
            if len(tokens) < 2:
                raise DocumentSyntaxError("elements line needs at least one name", line_no)
            if len(set(tokens[1:])) != len(tokens) - 1:
                raise DuplicateName("duplicate element name", line_no)
            doc.elements = tokens[1:]
        elif head == "gammas":
            if doc.gammas:
                raise DuplicateName("gammas already declared", line_no)
            if len(tokens) < 2:
                raise DocumentSyntaxError("gammas line needs at least one name", line_no)
            if len(set(tokens[1:])) != len(tokens) - 1:
                raise DuplicateName("duplicate gamma name", line_no)
            doc.gammas = tokens[1:]
        elif head == "table":
            if len(tokens) != 2:
                raise DocumentSyntaxError("usage: table GAMMA", line_no)
            if not doc.elements or not doc.gammas:
                raise DocumentSyntaxError("declare elements and gammas first", line_no)
            if tokens[1] not in doc.gammas:
                raise DocumentSyntaxError(f"unknown gamma {tokens[1]!r}", line_no)
            if tokens[1] in doc.tables:
                raise DuplicateName(f"table {tokens[1]!r} already given", line_no)
            pending_table = tokens[1]
            pending_rows = []
        elif head == "fuzzy":
            if len(tokens) < 2:
                raise DocumentSyntaxError("usage: fuzzy NAME el=grade ...", line_no)
            name = tokens[1]
            if name in doc.fuzzy:
                raise DuplicateName(f"fuzzy {name!r} already given", line_no)
            grades = {}
            for tok in tokens[2:]:
                el, eq, val = tok.partition("=")
                if not eq or el not in doc.elements:
                    raise DocumentSyntaxError(f"bad grade assignment {tok!r}", line_no)
                grades[el] = _grade_token(line_no, val)
            doc.fuzzy[name] = grades
        elif head == "subset":
            if len(tokens) < 2:
                raise DocumentSyntaxError("usage: subset NAME el ...", line_no)
            name = tokens[1]
            if name in doc.subsets:
                raise DuplicateName(f"subset {name!r} already given", line_no)
            for el in tokens[2:]:
                if el not in doc.elements:
                    raise DocumentSyntaxError(f"unknown element {el!r}", line_no)
            doc.subsets[name] = tokens[2:]
        elif head == "map":
            # map NAME -> TARGET : x=y ...
            if len(tokens) < 5 or tokens[2] != "->" or ":" not in tokens:
                raise DocumentSyntaxError("usage: map NAME -> FILE : x=y ...", line_no)
            name = tokens[1]
            if name in doc.maps:
                raise DuplicateName(f"map {name!r} already given", line_no)
            colon = tokens.index(":")
            target = " ".join(tokens[3:colon])
            assignments = {}
            for tok in tokens[colon + 1:]:
                src, eq, dst = tok.partition("=")
                if not eq or src not in doc.elements:
                    raise DocumentSyntaxError(f"bad map assignment {tok!r}", line_no)
                assignments[src] = dst
            doc.maps[name] = MapSpec(target, assignments)
        else:
            raise DocumentSyntaxError(f"unknown directive {head!r}", line_no)

    close_table(len(lines))
    if not doc.elements:
        raise DocumentSyntaxError("missing elements line")
    if not doc.gammas:
        raise DocumentSyntaxError("missing gammas line")
    for g in doc.gammas:
        if g not in doc.tables:
            raise MissingTable(f"no table for gamma {g!r}")
    return doc


def print_document(doc: StructureDocument) -> str:
    """Canonical text form; parse(print_document(doc)) == doc."""
    out = [
        "elements " + " ".join(doc.elements),
        "gammas " + " ".join(doc.gammas),
    ]
    for g in doc.gammas:
        out.append(f"table {g}")
        out.extend(" ".join(row) for row in doc.tables[g])
    for name, grades in doc.fuzzy.items():
        entries = " ".join(f"{el}={grades[el]}" for el in doc.elements if el in grades)
        out.append(f"fuzzy {name} {entries}".rstrip())
    for name, members in doc.subsets.items():
        out.append(f"subset {name} " + " ".join(members))
    for name, spec in doc.maps.items():
        pairs = " ".join(f"{src}={dst}" for src, dst in spec.assignments.items())
        out.append(f"map {name} -> {spec.target} : {pairs}")
    return "\n".join(out) + "\n"


def document_for(structure: GammaSemigroup, fuzzy: dict | None = None) -> StructureDocument:
    doc = StructureDocument()
    doc.elements = list(structure.elements)
    doc.gammas = list(structure.gammas)
    for g, gname in enumerate(structure.gammas):
        doc.tables[gname] = [
            [structure.elements[structure.cayley[x][g][y]] for y in range(structure.n)]
            for x in range(structure.n)
        ]
    for name, mu in (fuzzy or {}).items():
        doc.fuzzy[name] = {
            el: mu.grades[i] for i, el in enumerate(structure.elements)
        }
    return doc


# ------------------------------------------------------------------ reports

def _b(value: bool) -> str:
    return "true" if value else "false"


def _witness_line(s: GammaSemigroup, w: Witness) -> str:
    parts = [f"x={s.elements[w.x]}", f"y={s.elements[w.y]}"]
    if w.z is not None:
        parts.append(f"z={s.elements[w.z]}")
    parts.append(f"gamma={s.gammas[w.gamma]}")
    if w.delta is not None:
        parts.append(f"delta={s.gammas[w.delta]}")
    if w.t is not None:
        parts.append(f"t={w.t}")
    if w.r is not None:
        parts.append(f"r={w.r}")
    return "witness: " + " ".join(parts)


def _emit_verdict(out: list, s: GammaSemigroup, verdict: PredicateVerdict) -> None:
    out.append(f"holds: {_b(verdict.holds)}")
    if verdict.witness is not None:
        out.append(_witness_line(s, verdict.witness))


# ------------------------------------------------------------- subcommands

def _load(path: str) -> StructureDocument:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _cmd_validate(args) -> tuple[int, list]:
    doc = _load(args.file)
    s = doc.to_structure()
    return 0, [f"file: {args.file}", "valid: true", f"elements: {s.n}", f"gammas: {s.k}"]


def _cmd_classify(args) -> tuple[int, list]:
    doc = _load(args.file)
    s = doc.to_structure()
    flags = classify_structure(s)
    out = [f"file: {args.file}"]
    out.append(f"regular: {_b(flags.regular)}")
    out.append(f"intra_regular: {_b(flags.intra_regular)}")
    out.append(f"left_duo: {_b(flags.left_duo)}")
    out.append(f"right_duo: {_b(flags.right_duo)}")
    out.append(f"duo: {_b(flags.duo)}")
    for name, members in doc.subsets.items():
        sub = classify_subset(s, s.subset_of_names(members))
        out.append(
            f"subset {name}: subsemigroup={_b(sub.subsemigroup)} "
            f"left_ideal={_b(sub.left_ideal)} right_ideal={_b(sub.right_ideal)} "
            f"bi_ideal={_b(sub.bi_ideal)}"
        )
    return 0, out


def _cmd_check(args) -> tuple[int, list]:
    doc = _load(args.file)
    s = doc.to_structure()
    mu = doc.fuzzy_subset(s, args.fuzzy)
    verdict = check_by_name(args.pred, mu)
    out = [f"file: {args.file}", f"fuzzy: {args.fuzzy}", f"pred: {args.pred}"]
    _emit_verdict(out, s, verdict)
    code = 0
    if args.expect is not None:
        expected = args.expect == "true"
        out.append(f"expected: {_b(expected)}")
        if verdict.holds != expected:
            code = 1
    return code, out


def _cmd_theorems(args) -> tuple[int, list]:
    doc = _load(args.file)
    s = doc.to_structure()
    mu = doc.fuzzy_subset(s, args.fuzzy)
    out = [f"file: {args.file}", f"fuzzy: {args.fuzzy}"]
    reports = [
        report_subsemigroup_equivalences(mu),
        report_bi_ideal_equivalences(mu),
        report_level_characterization(mu, "subsemigroup"),
        report_level_characterization(mu, "bi_ideal"),
        report_product_characterization(mu, "subsemigroup"),
        report_product_characterization(mu, "bi_ideal"),
    ]
    samples = sample_eq_bi_ideals(s, args.samples, args.seed, args.grid)
    reports.append(report_regularity_characterization(s, samples))
    reports.append(report_regular_intra_characterization(s, samples))
    for rep in reports:
        out.append(f"{rep.theorem_id}: {'agree' if rep.agree else 'DISAGREE'}")
        out.append(
            f"{rep.theorem_id} flags: " + " ".join(_b(f) for f in rep.condition_flags)
        )
        if rep.discrepancy is not None:
            indices, detail = rep.discrepancy
            out.append(f"{rep.theorem_id} discrepancy: {indices} {detail}")
    code = 0 if all(r.agree for r in reports) else 1
    return code, out


def _cmd_enumerate(args) -> tuple[int, list]:
    doc = _load(args.file)
    s = doc.to_structure()
    out = [f"file: {args.file}", f"kind: {args.kind}"]
    subsets = enumerate_crisp(s, args.kind)
    out.append(f"count: {len(subsets)}")
    for a in subsets:
        out.append("subset: " + " ".join(s.names_of(a)))
    return 0, out


def _cmd_search(args) -> tuple[int, list]:
    config = GeneratorConfig(
        n=args.n, k=args.k, seed=args.seed, grid=args.grid, count=args.count
    )
    structures = generate_structures(config, exhaustive=args.exhaustive)
    result = find_witness(structures, args.want, args.grid)
    out = [
        f"want: {args.want}",
        f"structures_scanned: {result.structures_scanned}",
        f"subsets_scanned: {result.subsets_scanned}",
        f"found: {_b(result.found)}",
    ]
    if result.found:
        s = result.structure
        for g, gname in enumerate(s.gammas):
            rows = "/".join(
                "".join(str(s.cayley[x][g][y]) for y in range(s.n)) for x in range(s.n)
            )
            out.append(f"cayley {gname}: {rows}")
        labels = ("mu",) if len(result.subsets) == 1 else ("mu1", "mu2", "union")
        for label, mu in zip(labels, result.subsets):
            out.append(f"{label}: " + " ".join(str(g) for g in mu.grades))
    return 0, out


def _cmd_fixtures(args) -> tuple[int, list]:
    pool = {f.id: f for f in fixtures()}
    if args.action == "list":
        return 0, [f"fixture: {fid}" for fid in pool]
    if args.id is None or args.id not in pool:
        raise DocumentError(f"unknown fixture {args.id!r}")
    fixture = pool[args.id]
    text = print_document(document_for(fixture.structure, fixture.fuzzy))
    if args.action == "show":
        return 0, [text.rstrip("\n")]
    if args.path is None:
        raise DocumentError("fixtures write needs a target path")
    with open(args.path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return 0, [f"wrote: {args.path}"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsf",
        description="Decide fuzzy-algebraic predicates over finite Gamma-semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a structure file")
    p.add_argument("file")

    p = sub.add_parser("classify", help="crisp structure and subset flags")
    p.add_argument("file")

    p = sub.add_parser("check", help="decide one predicate for one fuzzy subset")
    p.add_argument("file")
    p.add_argument("--fuzzy", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--expect", choices=["true", "false"])

    p = sub.add_parser("theorems", help="run the theorem reports")
    p.add_argument("file")
    p.add_argument("--fuzzy", required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--grid", type=int, default=10)

    p = sub.add_parser("enumerate", help="enumerate crisp subsets of a kind")
    p.add_argument("file")
    p.add_argument(
        "--kind", required=True,
        choices=["subsemigroup", "left_ideal", "right_ideal", "bi_ideal"],
    )

    p = sub.add_parser("search", help="hunt for a separating witness")
    p.add_argument("--want", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--grid", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--exhaustive", action="store_true")

    p = sub.add_parser("fixtures", help="list or export the built-in fixtures")
    p.add_argument("action", choices=["list", "show", "write"])
    p.add_argument("id", nargs="?")
    p.add_argument("path", nargs="?")

    return parser


def run(argv: list) -> int:
    """Execute one command; report on stdout; return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "validate": _cmd_validate,
        "classify": _cmd_classify,
        "check": _cmd_check,
        "theorems": _cmd_theorems,
        "enumerate": _cmd_enumerate,
        "search": _cmd_search,
        "fixtures": _cmd_fixtures,
    }
    try:
        code, lines = handlers[args.command](args)
    except (DocumentError, OSError, ValueError, InvalidAlpha, UnknownPredicateName) as exc:
        print(f"error: {exc}")
        return 2
    except GsfError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}")
        return 3
    for line in lines:
        print(line)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
