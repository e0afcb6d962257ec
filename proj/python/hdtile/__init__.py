"""Dynamic-resolution image tiling and visual token accounting."""

import json

from ._hdtile import (
    DecodeError,
    PartitionPlan,
    max_token_count,
    plan,
    plan_batches_json,
    tile,
    token_count,
)

__all__ = [
    "DecodeError",
    "PartitionPlan",
    "max_token_count",
    "plan",
    "plan_batches",
    "tile",
    "token_count",
]


def plan_batches(sources, steps, batch_hd25=16, seed=0):
    """Weighted dual-bucket batch plan.

    ``sources`` is a list of ``(name, sample_count, bucket)`` with bucket
    ``"HD25"`` or ``"HD55"``. Returns the plan as a dict with ``seed``,
    ``batch_sizes`` and ``steps``.
    """
    return json.loads(plan_batches_json(list(sources), steps, batch_hd25, seed))
