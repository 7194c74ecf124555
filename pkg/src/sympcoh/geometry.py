from __future__ import annotations

from dataclasses import dataclass


class GeometryError(ValueError):
    """Parameters outside the monotone range 1 <= k <= m."""


@dataclass(frozen=True)
class LineBundleGeometry:
    """The total space of ``O(-k) -> CP^m``.

    ``kappa = m + 1`` is the monotonicity constant of the base; the bundle is
    monotone exactly when ``kappa > k``.
    """

    m: int
    k: int

    def __post_init__(self):
        if not isinstance(self.m, int) or not isinstance(self.k, int):
            raise GeometryError("m and k must be integers")
        if self.m < 1:
            raise GeometryError(f"m must be positive, got {self.m}")
        if not 1 <= self.k <= self.m:
            raise GeometryError(f"need 1 <= k <= m, got m={self.m}, k={self.k}")

    @property
    def kappa(self) -> int:
        return self.m + 1

    @property
    def sh_rank(self) -> int:
        """``kappa - k``: number of nonzero eigenvalues, and critical points of the mirror."""
        return self.m + 1 - self.k


def grid(max_m: int = 4):
    """All geometries with ``1 <= k <= m <= max_m``."""
    return [LineBundleGeometry(m, k) for m in range(1, max_m + 1) for k in range(1, m + 1)]
