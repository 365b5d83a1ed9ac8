"""Selects the compiled enumeration kernels, pure-Python twins otherwise."""

try:
    from hyperlah._speedups import count_box_slice, weight_histogram

    BACKEND = "cython"
except ImportError:  # extension not built; same semantics, slower
    from hyperlah._pure import count_box_slice, weight_histogram

    BACKEND = "python"

__all__ = ["count_box_slice", "weight_histogram", "BACKEND", "kernel_backend"]


def kernel_backend() -> str:
    """Name of the enumeration backend in use: 'cython' or 'python'."""
    return BACKEND
