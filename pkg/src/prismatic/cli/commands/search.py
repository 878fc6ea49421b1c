"""search and complete-c9: the two commands that run a search."""

import argparse
import logging
from pathlib import Path

from ...config import get_settings
from ...embedding import read_embedding, serialize_embedding
from ...embedding.emb_format import format_face_list
from ...models import SearchSpec, SearchStatus
from ...pipelines import format_script, run_pipeline_c9
from ...search import search_patchworks
from ..common import Outcome, add_common_flags, hash_inputs, new_report, verdict, write_text

logger = logging.getLogger(__name__)


def cmd_search(args: argparse.Namespace) -> Outcome:
    settings = get_settings()
    report = new_report("search")
    # PRISMATIC_THREADS caps the pool; --threads can only ask for fewer
    threads = max(1, min(args.threads or settings.threads, settings.threads))
    spec = SearchSpec(
        n=args.n,
        genus=args.genus,
        shapes=args.shapes,
        budget=args.budget if args.budget is not None else settings.search_budget,
        checkpoint=args.checkpoint,
        audit=args.audit,
        threads=threads,
        split_depth=args.split_depth,
        max_findings=args.max_findings,
    )
    report.details["spec"] = spec.fingerprint()
    report.counts["threads"] = threads

    def progress(done: int, total: int) -> None:
        logger.info("prefix %d/%d done", done, total)

    outcome_report = search_patchworks(spec, progress=progress)
    report.counts.update(
        {
            "nodes": outcome_report.nodes,
            "leaves": outcome_report.leaves,
            "pruned": outcome_report.pruned,
            "findings": len(outcome_report.findings),
            "prefixes_done": outcome_report.prefixes_done,
            "prefixes_total": outcome_report.prefixes_total,
        }
    )
    report.details["status"] = outcome_report.status.value
    report.details["face_vectors"] = outcome_report.face_vectors

    outcome = Outcome(report)
    if args.out is not None:
        for i, finding in enumerate(outcome_report.findings):
            write_text(report, args.out / f"finding-{i:04d}.emb", finding.embedding)
            write_text(report, args.out / f"finding-{i:04d}.cov", format_face_list(finding.cover))

    mark = "✅" if outcome_report.status == SearchStatus.COMPLETE else "⚠️ "
    outcome.lines.append(
        f"{mark} {outcome_report.status.value}: {outcome_report.nodes} nodes, "
        f"{outcome_report.leaves} leaves, {outcome_report.pruned} pruned"
    )
    for key, count in sorted(outcome_report.face_vectors.items()):
        outcome.lines.append(f"   face vector [{key}]: {count}")
    outcome.lines.append(f"🔎 {len(outcome_report.findings)} finding(s)")
    outcome.lines.extend(f"💾 wrote {path}" for path in report.outputs)
    return outcome


def cmd_complete_c9(args: argparse.Namespace) -> Outcome:
    settings = get_settings()
    report = new_report("complete-c9")
    hash_inputs(report, embedding=args.embedding)
    rs = read_embedding(args.embedding)
    budget = args.budget if args.budget is not None else settings.c9_budget
    result = run_pipeline_c9(rs, tuple(args.specials), budget=budget, seed=args.seed)
    report.counts["explored"] = result.explored
    report.genus.update(result.ledger)
    report.details["status"] = result.status

    outcome = Outcome(report)
    outcome.lines.append(f"🧭 explored {result.explored} states (budget {budget})")
    if result.status == "exhausted":
        verdict(outcome, "completion", False, "no hexagon completion found within the budget")
        return outcome
    verdict(outcome, "completion", True, f"completion script of {len(result.script)} steps")
    write_text(report, f"{args.out}.script", format_script(result.script))
    write_text(report, f"{args.out}.emb", serialize_embedding(result.prism))
    report.details["snug"] = result.snug.model_dump(mode="json")
    message = f"snug prism, genus {result.snug.genus}"
    if not result.snug.snug:
        message = f"prism is not snug: {result.snug.witness}"
    verdict(outcome, "snug", result.snug.snug, message)
    outcome.lines.extend(f"💾 wrote {path}" for path in report.outputs)
    return outcome


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("search", help="exhaustive search for K_n embeddings with a patchwork")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--genus", type=int, required=True)
    parser.add_argument("--shapes", nargs="*", default=[], help='e.g. "4,5" or "cover:2"')
    parser.add_argument("--budget", type=int, default=None, help="node budget")
    parser.add_argument("--threads", type=int, default=None, help="worker processes")
    parser.add_argument("--checkpoint", default=None, help="resume file")
    parser.add_argument("--audit", action="store_true", help="walk pruned branches and fail if one hides a result")
    parser.add_argument("--split-depth", type=int, default=3)
    parser.add_argument("--max-findings", type=int, default=None)
    parser.add_argument("--out", type=Path, default=None, help="directory for finding .emb/.cov files")
    add_common_flags(parser)
    parser.set_defaults(handler=cmd_search)

    parser = subparsers.add_parser("complete-c9", help="search a hexagon completion and build a snug prism")
    parser.add_argument("embedding", help="triangular K_{n+1} - K_3")
    parser.add_argument("--specials", nargs=3, default=["x", "y", "z"])
    parser.add_argument("--budget", type=int, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="c9", help="prefix for the .script and .emb outputs")
    add_common_flags(parser)
    parser.set_defaults(handler=cmd_complete_c9)
