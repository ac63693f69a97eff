from __future__ import annotations

import os

import pytest

from bettistack.core.errors import InvalidParameter
from bettistack.runtime.parallel import parallel_map, resolve_workers


def test_resolve_workers() -> None:
    assert resolve_workers(3) == 3
    assert resolve_workers(None) == max(1, os.cpu_count() or 1)
    with pytest.raises(InvalidParameter):
        resolve_workers(0)


def test_serial_path_preserves_order() -> None:
    assert parallel_map(abs, [-3, 1, -2]) == [3, 1, 2]


def test_below_threshold_stays_serial() -> None:
    calls = []

    def record(x: int) -> int:
        calls.append(x)
        return x * 2

    # a local function cannot be pickled, so this only passes if no pool is used
    assert parallel_map(record, [1, 2, 3], workers=4, threshold=10) == [2, 4, 6]
    assert calls == [1, 2, 3]


def test_pool_preserves_order() -> None:
    items = list(range(-50, 50))
    assert parallel_map(abs, items, workers=2, threshold=1) == [abs(x) for x in items]


def test_empty_input() -> None:
    assert parallel_map(abs, [], workers=2, threshold=0) == []
