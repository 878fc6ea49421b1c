"""prism, snug, slice and formula: the K_n x K_2 commands."""

import argparse
from pathlib import Path
from typing import List

from ...embedding import read_embedding, serialize_embedding, trace_faces
from ...embedding.emb_format import format_face_list, parse_face_list
from ...embedding.faces import FaceSet
from ...errors import PrismaticError
from ...prism import (
    build_prism,
    check_snug,
    faces_by_labels,
    genus_formula,
    genus_table,
    is_patchwork,
    lower_bound,
    slice_prism,
)
from ..common import (
    Outcome,
    add_common_flags,
    face_counts,
    hash_inputs,
    new_report,
    verdict,
    write_text,
)


def _face_index(token: str) -> int:
    try:
        return int(token.lstrip("f"))
    except ValueError:
        raise PrismaticError(f"expected a face like f3, got {token!r}")


def _cover(args: argparse.Namespace, fs: FaceSet) -> List[int]:
    if args.cover_file is not None:
        return faces_by_labels(fs, parse_face_list(Path(args.cover_file).read_text(encoding="utf-8")))
    if not args.cover:
        raise PrismaticError("give the cover faces with --cover f0 f3 ... or --cover-file")
    return [_face_index(token) for token in args.cover]


def _snug_lines(outcome: Outcome, prism_rs) -> None:
    report = check_snug(prism_rs)
    outcome.report.details["snug"] = report.model_dump(mode="json")
    outcome.report.counts["matching_edges"] = report.matching_edges
    message = f"snug (n={report.n}, genus {report.genus}, {report.faces} faces)"
    if not report.snug:
        message = f"not snug: {report.witness}"
    verdict(outcome, "snug", report.snug, message)


def cmd_prism(args: argparse.Namespace) -> Outcome:
    report = new_report("prism")
    hash_inputs(report, embedding=args.embedding, cover=args.cover_file)
    rs = read_embedding(args.embedding)
    fs = trace_faces(rs)
    cover = _cover(args, fs)
    prism_rs = build_prism(rs, cover)
    prism_fs = trace_faces(prism_rs)
    face_counts(report, fs, "base_")
    face_counts(report, prism_fs)
    report.details["cover"] = [list(fs.faces[k].vertices) for k in cover]
    write_text(report, args.out, serialize_embedding(prism_rs))

    outcome = Outcome(report)
    expected = 2 * fs.genus + len(cover) - 1
    verdict(
        outcome,
        "genus",
        prism_fs.genus == expected,
        f"prism genus {prism_fs.genus} = 2*{fs.genus} + {len(cover)} - 1",
    )
    if args.check_snug:
        _snug_lines(outcome, prism_rs)
    outcome.lines.append(f"💾 wrote {args.out}")
    return outcome


def cmd_snug(args: argparse.Namespace) -> Outcome:
    report = new_report("snug")
    hash_inputs(report, embedding=args.embedding)
    rs = read_embedding(args.embedding)
    face_counts(report, trace_faces(rs))
    outcome = Outcome(report)
    _snug_lines(outcome, rs)
    return outcome


def cmd_slice(args: argparse.Namespace) -> Outcome:
    report = new_report("slice")
    hash_inputs(report, embedding=args.embedding)
    rs = read_embedding(args.embedding)
    sliced = slice_prism(rs)
    outcome = Outcome(report)
    report.genus["prism"] = sliced.prism_genus
    report.counts["h"] = sliced.h
    prefix = args.out
    for side, (half, patch) in enumerate(((sliced.side0, sliced.patchwork0), (sliced.side1, sliced.patchwork1))):
        fs = trace_faces(half)
        face_counts(report, fs, f"side{side}_")
        cycles = [fs.faces[k].vertices for k in patch]
        write_text(report, f"{prefix}.side{side}.emb", serialize_embedding(half))
        write_text(report, f"{prefix}.side{side}.cov", format_face_list(cycles))
        check = is_patchwork(fs, patch)
        verdict(outcome, f"side{side}_patchwork", check.ok, f"side {side}: genus {fs.genus}, patchwork of {len(patch)} face(s)")

    rebuilt = trace_faces(build_prism(sliced.side0, sliced.patchwork0)).genus
    verdict(outcome, "rebuild", rebuilt == sliced.prism_genus, f"rebuilding from side 0 gives genus {rebuilt}")
    outcome.lines.extend(f"💾 wrote {path}" for path in report.outputs)
    return outcome


def cmd_formula(args: argparse.Namespace) -> Outcome:
    report = new_report("formula")
    if args.n is None and args.table is None:
        raise PrismaticError("give n or --table N")
    outcome = Outcome(report)
    if args.table is not None:
        rows = genus_table(args.table)
        report.details["table"] = [row.model_dump() for row in rows]
        for row in rows:
            flag = "  (exception)" if row.exception else ""
            outcome.lines.append(f"   n={row.n:<4} bound={row.lower_bound:<5} genus={row.genus}{flag}")
    if args.n is not None:
        bound, genus = lower_bound(args.n), genus_formula(args.n)
        report.counts["n"] = args.n
        report.genus.update({"lower_bound": bound, "genus": genus})
        report.verdicts["exception"] = genus != bound
        tail = " (exception: one more than the bound)" if genus != bound else ""
        outcome.lines.append(f"📏 K{args.n} x K2: lower bound {bound}, genus {genus}{tail}")
    return outcome


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("prism", help="build K_n x K_2 from an embedding and a facial cover")
    parser.add_argument("embedding")
    parser.add_argument("--cover", nargs="+", default=None, help="cover faces, e.g. f0 f4")
    parser.add_argument("--cover-file", default=None, help=".cov file, one face per line")
    parser.add_argument("--check-snug", action="store_true")
    parser.add_argument("--out", type=Path, default=Path("out.emb"))
    add_common_flags(parser)
    parser.set_defaults(handler=cmd_prism)

    parser = subparsers.add_parser("snug", help="check whether a prism embedding is snug")
    parser.add_argument("embedding")
    add_common_flags(parser)
    parser.set_defaults(handler=cmd_snug)

    parser = subparsers.add_parser("slice", help="cut a snug prism into two patchworked halves")
    parser.add_argument("embedding")
    parser.add_argument("--out", default="slice", help="prefix for the .emb and .cov outputs")
    add_common_flags(parser)
    parser.set_defaults(handler=cmd_slice)

    parser = subparsers.add_parser("formula", help="genus of K_n x K_2")
    parser.add_argument("n", nargs="?", type=int, default=None)
    parser.add_argument("--table", type=int, default=None, metavar="N", help="print n = 2..N")
    add_common_flags(parser)
    parser.set_defaults(handler=cmd_formula)
