"""
Run a patchwork search, optionally in parallel and resumable.

The tree is cut at a fixed branching depth into prefixes. Each prefix is
an independent job with its own share of the node budget, and results are
merged in prefix order, so the outcome does not depend on the number of
worker processes or on interruptions.
"""

import logging
from multiprocessing import Pool
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from ..models import SearchOutcomeReport, SearchSpec, SearchStatus
from .backtrack import PrefixResult, RotationSearch
from .checkpoint import Checkpoint
from .face_vectors import Shape, face_vector_candidates

logger = logging.getLogger(__name__)

Job = Tuple[dict, Tuple[int, ...], Optional[int]]


def build_engine(spec: SearchSpec, budget: Optional[int] = None) -> RotationSearch:
    shapes = [Shape.parse(text) for text in spec.shapes]
    candidates = face_vector_candidates(spec.n, spec.genus, shapes)
    return RotationSearch(
        spec.n,
        spec.genus,
        candidates,
        shapes,
        audit=spec.audit,
        budget=budget,
        max_findings=spec.max_findings,
    )


def _run_prefix(job: Job) -> dict:
    spec_data, prefix, budget = job
    return build_engine(SearchSpec(**spec_data), budget).run(prefix).model_dump(mode="json")


def split_budget(total: Optional[int], count: int) -> List[Optional[int]]:
    """Equal shares, the remainder going to the earliest prefixes"""
    if total is None:
        return [None] * count
    base, extra = divmod(total, count)
    return [base + (1 if i < extra else 0) for i in range(count)]


def _results(jobs: Sequence[Job], threads: int) -> Iterator[dict]:
    if threads <= 1 or len(jobs) <= 1:
        for job in jobs:
            yield _run_prefix(job)
        return
    with Pool(processes=threads) as pool:
        # imap keeps submission order
        yield from pool.imap(_run_prefix, jobs)


def search_patchworks(
    spec: SearchSpec,
    progress: Optional[Callable[[int, int], None]] = None,
) -> SearchOutcomeReport:
    shapes = [Shape.parse(text) for text in spec.shapes]
    if not face_vector_candidates(spec.n, spec.genus, shapes):
        logger.info("no admissible face vector for n=%d genus=%d", spec.n, spec.genus)
        return SearchOutcomeReport(status=SearchStatus.COMPLETE, nodes=0, leaves=0, pruned=0)

    prefixes = build_engine(spec).prefixes(spec.split_depth)
    if not prefixes:
        return SearchOutcomeReport(status=SearchStatus.COMPLETE, nodes=0, leaves=0, pruned=0)
    budgets = split_budget(spec.budget, len(prefixes))
    checkpoint = Checkpoint.open(spec.checkpoint, spec, prefixes) if spec.checkpoint else None
    done = dict(checkpoint.done) if checkpoint else {}
    pending = [i for i in range(len(prefixes)) if i not in done]
    jobs = [(spec.model_dump(), prefixes[i], budgets[i]) for i in pending]
    logger.info("%d prefixes at depth %d, %d pending", len(prefixes), spec.split_depth, len(pending))

    merged = PrefixResult()
    exhausted = stopped = False
    fresh = _results(jobs, spec.threads)
    finished = 0
    for i in range(len(prefixes)):
        if i in done:
            result = done[i]
        else:
            result = PrefixResult.model_validate(next(fresh))
            if checkpoint:
                checkpoint.record(i, result)
        finished += 1
        merged.nodes += result.nodes
        merged.leaves += result.leaves
        merged.pruned += result.pruned
        for key, count in result.face_vectors.items():
            merged.face_vectors[key] = merged.face_vectors.get(key, 0) + count
        merged.findings.extend(result.findings)
        exhausted |= result.exhausted
        if progress:
            progress(finished, len(prefixes))
        if spec.max_findings is not None and len(merged.findings) >= spec.max_findings:
            stopped = True
            break
    fresh.close()

    if stopped:
        status = SearchStatus.STOPPED
        merged.findings = merged.findings[: spec.max_findings]
    elif exhausted:
        status = SearchStatus.BUDGET_EXHAUSTED
    else:
        status = SearchStatus.COMPLETE
    logger.info("search %s: %d nodes, %d findings", status.value, merged.nodes, len(merged.findings))
    return SearchOutcomeReport(
        status=status,
        nodes=merged.nodes,
        leaves=merged.leaves,
        pruned=merged.pruned,
        findings=merged.findings,
        face_vectors=merged.face_vectors,
        prefixes_done=finished,
        prefixes_total=len(prefixes),
    )
