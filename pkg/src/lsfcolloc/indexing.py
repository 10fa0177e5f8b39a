"""Flat <-> multi-index encoding for the tensor-product grid.

All labels are 1-based at this boundary: ``i_m`` runs over ``1..M`` and the
flat index over ``1..M**D``, with ``i_1`` the slowest-varying entry.  Array
storage inside the package uses the matching 0-based C order.
"""

from .errors import DomainError


def _check_size(m):
    if m < 1:
        raise DomainError(f"grid size must be positive, got {m}")


def encode(idx, m: int) -> int:
    _check_size(m)
    if len(idx) < 1:
        raise DomainError("multi-index must have at least one entry")
    flat = 0
    for i in idx:
        if not 1 <= i <= m:
            raise DomainError(f"index entry {i} outside [1, {m}]")
        flat = flat * m + (i - 1)
    return flat + 1


def decode(flat: int, m: int, dims: int) -> tuple:
    _check_size(m)
    if dims < 1:
        raise DomainError(f"dims must be >= 1, got {dims}")
    if not 1 <= flat <= m**dims:
        raise DomainError(f"flat index {flat} outside [1, {m**dims}]")
    rest = flat - 1
    out = []
    for _ in range(dims):
        rest, r = divmod(rest, m)
        out.append(r + 1)
    return tuple(reversed(out))


def decode_floor_formula(flat: int, m: int, dims: int, eps: float | None = None) -> tuple:
    """Peel entries off with ``floor(K / (M**(D-j) + eps)) + 1``.

    Literal real-arithmetic version of the decoding; used only to check
    :func:`decode`.  The formula is right only for ``0 < eps <= 1/(M-1)``
    (larger ``eps`` rounds ``K = c M**p + 1`` down once ``c eps > 1``), so
    the default is ``1/(2M)``.
    """
    if eps is None:
        eps = 0.5 / m
    rest = flat
    out = []
    for j in range(1, dims):
        i = int(rest / (m ** (dims - j) + eps)) + 1
        out.append(i)
        rest -= m ** (dims - j) * (i - 1)
    out.append(rest)
    return tuple(out)


def node_offset(i: int, n_half_count: int) -> int:
    """1-based grid label -> symmetric LSF label ``k = i - N/2``."""
    if not 1 <= i <= n_half_count - 1:
        raise DomainError(f"grid label {i} outside [1, {n_half_count - 1}]")
    return i - n_half_count // 2


def node_label(k: int, n_half_count: int) -> int:
    """Inverse of :func:`node_offset`."""
    half = n_half_count // 2
    if not 1 - half <= k <= half - 1:
        raise DomainError(f"LSF label {k} outside [{1 - half}, {half - 1}]")
    return k + half
