"""Compiled and pure kernels must be interchangeable."""

import pytest

from hyperlah import _kernels, _pure
from hyperlah.partitions import enumerate_ordered_partitions, partition_weight

try:
    from hyperlah import _speedups
except ImportError:
    _speedups = None

BACKENDS = [_pure] + ([_speedups] if _speedups is not None else [])


def census(n, m):
    hist = [0] * (n - m + 1)
    for p in enumerate_ordered_partitions(n, m):
        hist[partition_weight(p)] += 1
    return hist


def test_selected_backend_is_valid():
    assert _kernels.BACKEND in ("cython", "python")
    assert _kernels.kernel_backend() == _kernels.BACKEND


@pytest.mark.parametrize("impl", BACKENDS)
def test_weight_histogram_matches_definitional_census(impl):
    for n in range(1, 8):
        for m in range(1, n + 1):
            assert impl.weight_histogram(n, m) == census(n, m), (impl.__name__, n, m)


def test_twins_agree_on_larger_instances():
    if _speedups is None:
        pytest.skip("extension not built")
    for n in range(1, 9):
        for m in range(1, n + 1):
            assert _speedups.weight_histogram(n, m) == _pure.weight_histogram(n, m)


@pytest.mark.parametrize("impl", BACKENDS)
def test_weight_histogram_rejects_bad_args(impl):
    with pytest.raises(ValueError):
        impl.weight_histogram(3, 0)
    with pytest.raises(ValueError):
        impl.weight_histogram(3, 4)


@pytest.mark.parametrize("impl", BACKENDS)
def test_count_box_slice_values(impl):
    assert impl.count_box_slice(4, 2, 4) == 19
    assert impl.count_box_slice(3, 0, 0) == 1
    assert impl.count_box_slice(0, 5, 0) == 1
    assert impl.count_box_slice(0, 5, 1) == 0
    assert impl.count_box_slice(3, 2, 7) == 0
    assert impl.count_box_slice(3, 2, -1) == 0
    with pytest.raises(ValueError):
        impl.count_box_slice(-1, 2, 0)
    with pytest.raises(ValueError):
        impl.count_box_slice(2, -1, 0)


def test_count_twins_agree():
    if _speedups is None:
        pytest.skip("extension not built")
    for n in range(1, 6):
        for t in range(4):
            for target in range(n * t + 2):
                assert _speedups.count_box_slice(n, t, target) == _pure.count_box_slice(
                    n, t, target
                )
