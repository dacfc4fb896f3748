"""Cellular partition of the search box and neighborhood queries.

The search hypercube is split into ``divisions_per_dim`` equal slices per
dimension, giving ``K**D`` box cells. Cells are addressed by integer
coordinate tuples. Neighborhoods are bounded (no wrap-around): offsets that
fall outside the grid are simply dropped, so edge cells have fewer
neighbors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConfigurationError

CellIndex = tuple[int, ...]


class Topology(Enum):
    MOORE = "moore"
    VON_NEUMANN = "von_neumann"


@dataclass(frozen=True)
class GridSpec:
    divisions_per_dim: int
    dimensions: int
    search_range: tuple[float, float]
    topology: Topology = Topology.MOORE
    neighborhood_radius: int = 1

    def validate(self) -> None:
        if self.divisions_per_dim < 1:
            raise ConfigurationError(
                f"divisions_per_dim must be >= 1, got {self.divisions_per_dim}"
            )
        if self.dimensions < 1:
            raise ConfigurationError(f"dimensions must be >= 1, got {self.dimensions}")
        if self.neighborhood_radius < 0:
            raise ConfigurationError(
                f"neighborhood_radius must be >= 0, got {self.neighborhood_radius}"
            )
        lo, hi = self.search_range
        if not lo < hi:
            raise ConfigurationError(
                f"search_range must satisfy min < max, got {self.search_range}"
            )

    @property
    def cell_width(self) -> float:
        lo, hi = self.search_range
        return (hi - lo) / self.divisions_per_dim

    def cell_of(self, x: np.ndarray) -> CellIndex:
        """Map an in-range point to the unique cell containing it.

        The upper boundary of the box maps into the last cell, so the cells
        form an exact partition of the closed search box.
        """
        lo, hi = self.search_range
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimensions,):
            raise ValueError(
                f"point has shape {x.shape}, expected ({self.dimensions},)"
            )
        if (x < lo).any() or (x > hi).any():
            raise ValueError(f"point {x!r} outside search range [{lo}, {hi}]")
        k = self.divisions_per_dim
        coords = np.floor((x - lo) / self.cell_width).astype(int)
        np.clip(coords, 0, k - 1, out=coords)
        return tuple(int(c) for c in coords)

    def cell_box(self, c: CellIndex) -> tuple[np.ndarray, np.ndarray]:
        """Lower and upper corners of a cell's box."""
        lo, _ = self.search_range
        w = self.cell_width
        lower = lo + w * np.asarray(c, dtype=float)
        return lower, lower + w

    def neighbors(self, c: CellIndex) -> set[CellIndex]:
        """Neighboring cells of c under the configured topology, excluding c."""
        r = self.neighborhood_radius
        k = self.divisions_per_dim
        out: set[CellIndex] = set()
        for offset in itertools.product(range(-r, r + 1), repeat=self.dimensions):
            if all(o == 0 for o in offset):
                continue
            if self.topology is Topology.VON_NEUMANN and sum(abs(o) for o in offset) > r:
                continue
            cand = tuple(ci + oi for ci, oi in zip(c, offset))
            if all(0 <= ci < k for ci in cand):
                out.add(cand)
        return out
