"""trace, split and transform: commands on a single embedding file."""

import argparse
from pathlib import Path

from ...embedding import read_embedding, serialize_embedding, split_vertex, trace_faces
from ...errors import PrismaticError
from ...pipelines import read_script, run_script
from ...prism import split_complete_check
from ..common import (
    Outcome,
    add_common_flags,
    details,
    face_counts,
    hash_inputs,
    length_summary,
    new_report,
    verdict,
    write_text,
)


def cmd_trace(args: argparse.Namespace) -> Outcome:
    report = new_report("trace")
    hash_inputs(report, embedding=args.embedding)
    rs = read_embedding(args.embedding)
    fs = trace_faces(rs)
    face_counts(report, fs)
    details(report, face_lengths={str(k): c for k, c in sorted(fs.lengths.items())})
    outcome = Outcome(report)
    outcome.lines.append(f"📐 V={fs.v} E={fs.e} F={fs.f} genus={fs.genus}")
    outcome.lines.append(f"   faces: {length_summary(fs)}")
    if args.faces:
        outcome.lines.extend(f"   f{k}: {face}" for k, face in enumerate(fs.faces))
        details(report, faces=[list(face.vertices) for face in fs.faces])
    report.verdicts["triangular"] = fs.is_triangular()
    return outcome


def cmd_split(args: argparse.Namespace) -> Outcome:
    report = new_report("split")
    hash_inputs(report, embedding=args.embedding)
    rs = read_embedding(args.embedding)
    before = trace_faces(rs)
    face = args.face
    if face is None:
        hexagons = [k for k in before.nontriangular() if before.faces[k].sides == 6]
        if len(hexagons) != 1:
            raise PrismaticError("pass --face: the embedding does not have exactly one hexagon")
        face = hexagons[0]
    result = split_vertex(rs, args.vertex, face, args.u, args.v)
    after = trace_faces(result)
    face_counts(report, before, "before_")
    face_counts(report, after, "after_")
    write_text(report, args.out, serialize_embedding(result))

    outcome = Outcome(report)
    outcome.lines.append(f"✂️  split {args.vertex} along f{face}: genus {before.genus} -> {after.genus}")
    verdict(outcome, "triangular", after.is_triangular(), "result is triangular")
    verdict(outcome, "genus_drop", after.genus == before.genus - 1, "genus dropped by exactly one")
    check = split_complete_check(result, args.u, args.v)
    verdict(outcome, "split_complete", check.ok, "split-complete" + ("" if check.ok else f": {check.witness}"))
    outcome.lines.append(f"💾 wrote {args.out}")
    return outcome


def cmd_transform(args: argparse.Namespace) -> Outcome:
    report = new_report("transform")
    hash_inputs(report, embedding=args.embedding, script=args.script)
    rs = read_embedding(args.embedding)
    run = run_script(rs, read_script(args.script))
    report.details["audit"] = [entry.model_dump() for entry in run.audit]
    fs = trace_faces(run.result)
    face_counts(report, fs)
    write_text(report, args.out, serialize_embedding(run.result))

    outcome = Outcome(report)
    for entry in run.audit:
        outcome.lines.append(
            f"   {entry.step:>3} {entry.op:<24} v={entry.v} e={entry.e} f={entry.f} genus={entry.genus}"
        )
    verdict(outcome, "ledger", True, f"{len(run.audit) - 1} steps replayed, every delta matched")
    outcome.lines.append(f"💾 wrote {args.out}")
    return outcome


def register(subparsers: argparse._SubParsersAction) -> None:
    trace = subparsers.add_parser("trace", help="trace faces and report V, E, F and genus")
    trace.add_argument("embedding", help=".emb file")
    trace.add_argument("--faces", action="store_true", help="list every face")
    add_common_flags(trace)
    trace.set_defaults(handler=cmd_trace)

    split = subparsers.add_parser("split", help="split a vertex met twice by a hexagonal face")
    split.add_argument("embedding")
    split.add_argument("--vertex", required=True)
    split.add_argument("--face", type=lambda s: int(s.lstrip("f")), default=None, help="hexagon, e.g. f12")
    split.add_argument("--u", default="u")
    split.add_argument("--v", default="v")
    split.add_argument("--out", type=Path, default=Path("split.emb"))
    add_common_flags(split)
    split.set_defaults(handler=cmd_split)

    transform = subparsers.add_parser("transform", help="replay a surgery script with a genus audit")
    transform.add_argument("embedding")
    transform.add_argument("script", help="one step per line")
    transform.add_argument("--out", type=Path, default=Path("transformed.emb"))
    add_common_flags(transform)
    transform.set_defaults(handler=cmd_transform)
