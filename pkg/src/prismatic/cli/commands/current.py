"""derive, check-current and attach: current graphs and their derived embeddings."""

import argparse
from pathlib import Path
from typing import Optional

from ...current import (
    CircuitLog,
    attach_vortices,
    check_index1,
    check_index3,
    derive,
    read_current_graph,
    read_log,
    trace_circuits,
)
from ...embedding import read_embedding, serialize_embedding, trace_faces
from ...errors import PrismaticError
from ...models import PrincipleReport, PrincipleStatus
from ..common import (
    EXIT_VERIFY,
    Outcome,
    add_common_flags,
    face_counts,
    hash_inputs,
    length_summary,
    new_report,
    verdict,
    write_text,
)

MARKS = {PrincipleStatus.PASS: "✅", PrincipleStatus.FAIL: "❌", PrincipleStatus.NOT_CHECKABLE: "⚠️ "}


def _default_out(source: str, suffix: str) -> Path:
    return Path(source).with_suffix(suffix)


def cmd_derive(args: argparse.Namespace) -> Outcome:
    report = new_report("derive")
    hash_inputs(report, log=args.log)
    log = read_log(args.log)
    rs = derive(log)
    base = trace_faces(rs)
    face_counts(report, base, "derived_")
    outcome = Outcome(report)
    outcome.lines.append(f"🧮 derived from index-{log.index} log over Z{log.modulus}: {length_summary(base)}")
    if args.attach:
        rs = attach_vortices(rs, log)
    fs = trace_faces(rs)
    face_counts(report, fs)
    out = args.out or _default_out(args.log, ".emb")
    write_text(report, out, serialize_embedding(rs))
    outcome.lines.append(f"📐 V={fs.v} E={fs.e} F={fs.f} genus={fs.genus}")
    if args.attach:
        verdict(outcome, "triangular", fs.is_triangular(), "triangular after attaching vortices")
    else:
        report.verdicts["triangular"] = fs.is_triangular()
    outcome.lines.append(f"💾 wrote {out}")
    return outcome


def _rotations(circuit: tuple) -> set:
    return {circuit[k:] + circuit[:k] for k in range(len(circuit))}


def _same_circuits(a: CircuitLog, b: CircuitLog) -> bool:
    """Equal up to where each circuit starts and the order of the circuits"""
    if a.modulus != b.modulus or a.index != b.index:
        return False
    left = sorted(min(_rotations(c), key=str) for c in a.circuits)
    right = sorted(min(_rotations(c), key=str) for c in b.circuits)
    return [str(c) for c in left] == [str(c) for c in right]


def _principles(outcome: Outcome, result: PrincipleReport) -> None:
    outcome.report.details[f"index{result.index}"] = result.model_dump(mode="json")
    for item in result.results:
        mark = MARKS[item.status]
        line = f"{mark} {item.name}: {item.detail}"
        if item.witness:
            line += f" ({', '.join(item.witness)})"
        outcome.lines.append(line)
        outcome.report.verdicts[item.name] = item.status.value
    if not result.passed:
        outcome.report.ok = False
        outcome.exit_code = EXIT_VERIFY


def cmd_check_current(args: argparse.Namespace) -> Outcome:
    report = new_report("check-current")
    hash_inputs(report, graph=args.graph, log=args.log)
    if args.graph is None and args.log is None:
        raise PrismaticError("give a current graph, a log (--log), or both")
    outcome = Outcome(report)
    if args.graph is None:
        log = read_log(args.log)
        _principles(outcome, check_index1(log))
        return outcome

    cg = read_current_graph(args.graph)
    traced = trace_circuits(cg)
    report.counts.update({"modulus": cg.modulus, "circuits": traced.index})
    outcome.lines.append(f"🔁 {traced.index} circuit(s) over Z{cg.modulus}")
    if args.log is not None:
        log = read_log(args.log)
        matches = _same_circuits(log, traced)
        verdict(outcome, "log_matches", matches, "traced circuits match the given log")
    if traced.index == 1:
        _principles(outcome, check_index1(traced, cg))
    elif traced.index == 3:
        _principles(outcome, check_index3(cg, args.numbering))
    else:
        raise PrismaticError(f"only index 1 and index 3 graphs are checked, this one has index {traced.index}")
    return outcome


def cmd_attach(args: argparse.Namespace) -> Outcome:
    report = new_report("attach")
    hash_inputs(report, embedding=args.embedding, log=args.log)
    rs = read_embedding(args.embedding)
    log = read_log(args.log)
    result = attach_vortices(rs, log)
    fs = trace_faces(result)
    face_counts(report, fs)
    out: Optional[Path] = args.out or _default_out(args.embedding, ".attached.emb")
    write_text(report, out, serialize_embedding(result))
    outcome = Outcome(report)
    outcome.lines.append(f"📐 V={fs.v} E={fs.e} F={fs.f} genus={fs.genus}")
    verdict(outcome, "triangular", fs.is_triangular(), "triangular after attaching vortices")
    outcome.lines.append(f"💾 wrote {out}")
    return outcome


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("derive", help="derive an embedding from a circuit log")
    parser.add_argument("log", help=".log file")
    parser.add_argument("--attach", action="store_true", help="also attach one vertex per vortex letter")
    parser.add_argument("--out", type=Path, default=None)
    add_common_flags(parser)
    parser.set_defaults(handler=cmd_derive)

    parser = subparsers.add_parser("check-current", help="check the construction principles of a current graph")
    parser.add_argument("graph", nargs="?", default=None, help=".cgr file")
    parser.add_argument("--log", default=None, help="circuit log (alone, only A2 can be checked)")
    parser.add_argument("--numbering", type=int, nargs=3, default=None, help="circuit numbers for index 3")
    add_common_flags(parser)
    parser.set_defaults(handler=cmd_check_current)

    parser = subparsers.add_parser("attach", help="attach vortex vertices to a derived embedding")
    parser.add_argument("embedding")
    parser.add_argument("log")
    parser.add_argument("--out", type=Path, default=None)
    add_common_flags(parser)
    parser.set_defaults(handler=cmd_attach)
