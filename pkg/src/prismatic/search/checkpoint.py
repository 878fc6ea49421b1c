"""
Checkpoint files for long searches.

A checkpoint records the prefix split and the finished prefixes; resuming
with the same search parameters skips the finished ones.
"""

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Dict, List, Tuple, Union

from ..errors import CheckpointError
from ..models import SearchSpec
from .backtrack import PrefixResult

logger = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1


def spec_hash(spec: SearchSpec) -> str:
    payload = json.dumps(spec.fingerprint(), sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class Checkpoint:
    def __init__(self, path: Union[str, Path], spec: SearchSpec, prefixes: List[Tuple[int, ...]]):
        self.path = Path(path)
        self.digest = spec_hash(spec)
        self.prefixes = prefixes
        self.done: Dict[int, PrefixResult] = {}

    @classmethod
    def open(cls, path: Union[str, Path], spec: SearchSpec, prefixes: List[Tuple[int, ...]]) -> "Checkpoint":
        """Load an existing checkpoint for these search parameters, or start an empty one"""
        checkpoint = cls(path, spec, prefixes)
        if not checkpoint.path.exists():
            return checkpoint
        try:
            data = json.loads(checkpoint.path.read_text(encoding="utf-8"))
            version, digest = data["version"], data["spec_hash"]
            stored = [tuple(p) for p in data["prefixes"]]
            done = {int(k): PrefixResult.model_validate(v) for k, v in data["done"].items()}
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise CheckpointError(f"unreadable checkpoint {checkpoint.path}: {exc}") from exc
        if version != CHECKPOINT_VERSION:
            raise CheckpointError(f"checkpoint version {version} is not supported")
        if digest != checkpoint.digest:
            raise CheckpointError("checkpoint was written for different search parameters")
        if stored != prefixes:
            raise CheckpointError("checkpoint prefixes do not match this search")
        checkpoint.done = done
        logger.info("resuming from %s: %d of %d prefixes done", checkpoint.path, len(done), len(prefixes))
        return checkpoint

    def record(self, index: int, result: PrefixResult) -> None:
        self.done[index] = result
        self.save()

    def save(self) -> None:
        data = {
            "version": CHECKPOINT_VERSION,
            "spec_hash": self.digest,
            "prefixes": [list(p) for p in self.prefixes],
            "done": {str(k): v.model_dump(mode="json") for k, v in sorted(self.done.items())},
        }
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(data, sort_keys=True), encoding="utf-8")
        os.replace(tmp, self.path)
