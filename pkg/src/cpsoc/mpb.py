"""Moving peaks benchmark: a dynamic landscape of drifting cone peaks.

The landscape is a set of cones over a box-bounded search space. Every peak
has a center, a height, and a width; fitness at a point is the maximum over
all cones of ``height - width * ||x - center||``. Heights, widths, and
centers are perturbed every ``change_frequency`` evaluations, which is what
makes the problem dynamic. The landscape owns a private random stream so
that optimizer randomness can never perturb the environment dynamics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError


@dataclass
class MpbParams:
    """Benchmark parameters; defaults are the conventional desk-scale setup."""

    num_peaks: int = 10
    change_frequency: int = 5000
    height_severity: float = 7.0
    width_severity: float = 1.0
    shift_length: float = 1.0
    dimensions: int = 5
    height_range: tuple[float, float] = (30.0, 70.0)
    width_range: tuple[float, float] = (1.0, 12.0)
    initial_height: float = 50.0
    search_range: tuple[float, float] = (0.0, 100.0)
    shift_correlation: float = 0.0

    def validate(self) -> None:
        if self.num_peaks < 1:
            raise ConfigurationError(f"num_peaks must be >= 1, got {self.num_peaks}")
        if self.dimensions < 1:
            raise ConfigurationError(f"dimensions must be >= 1, got {self.dimensions}")
        if self.change_frequency < 1:
            raise ConfigurationError(
                f"change_frequency must be >= 1, got {self.change_frequency}"
            )
        h_lo, h_hi = self.height_range
        if h_lo > h_hi:
            raise ConfigurationError(
                f"height_range must satisfy min <= max, got {self.height_range}"
            )
        if not (h_lo <= self.initial_height <= h_hi):
            raise ConfigurationError(
                f"initial_height must lie in height_range {self.height_range}, "
                f"got {self.initial_height}"
            )
        w_lo, w_hi = self.width_range
        if w_lo <= 0:
            raise ConfigurationError(
                f"width_range min must be > 0, got {w_lo}"
            )
        if w_lo > w_hi:
            raise ConfigurationError(
                f"width_range must satisfy min <= max, got {self.width_range}"
            )
        a_lo, a_hi = self.search_range
        if not a_lo < a_hi:
            raise ConfigurationError(
                f"search_range must satisfy min < max, got {self.search_range}"
            )
        if not (0.0 <= self.shift_correlation <= 1.0):
            raise ConfigurationError(
                f"shift_correlation must lie in [0, 1], got {self.shift_correlation}"
            )


@dataclass
class Peak:
    """One cone: its apex location, height, width, and the last applied drift."""

    center: np.ndarray
    height: float
    width: float
    last_shift: np.ndarray


def _reflect(value: float, lo: float, hi: float) -> float:
    """Fold a value back into [lo, hi] by mirroring at the bounds."""
    span = hi - lo
    if span <= 0.0:
        return lo
    y = (value - lo) % (2.0 * span)
    if y > span:
        y = 2.0 * span - y
    return lo + y


def _reflect_vector(vec: np.ndarray, lo: float, hi: float) -> np.ndarray:
    span = hi - lo
    y = np.mod(vec - lo, 2.0 * span)
    return lo + np.where(y > span, 2.0 * span - y, y)


class Landscape:
    """Mutable benchmark state: peaks, change schedule, and evaluation counter.

    Construction with identical ``(params, seed)`` is bit-reproducible. Every
    fitness query increments ``eval_count`` by exactly one; ``apply_change``
    increments ``change_count`` by exactly one.
    """

    def __init__(self, params: MpbParams, seed) -> None:
        params.validate()
        self.params = params
        self.rng = np.random.default_rng(seed)
        self.eval_count = 0
        self.change_count = 0

        m, d = params.num_peaks, params.dimensions
        a_lo, a_hi = params.search_range
        w_lo, w_hi = params.width_range
        centers = self.rng.uniform(a_lo, a_hi, size=(m, d))
        widths = self.rng.uniform(w_lo, w_hi, size=m)
        self.peaks = [
            Peak(
                center=centers[i].copy(),
                height=params.initial_height,
                width=float(widths[i]),
                last_shift=np.zeros(d),
            )
            for i in range(m)
        ]
        self._sync_arrays()

    def _sync_arrays(self) -> None:
        # Packed copies of the peak attributes keep evaluate() to a few
        # vectorized ops; rebuilt after every change.
        self._centers = np.array([p.center for p in self.peaks])
        self._heights = np.array([p.height for p in self.peaks])
        self._widths = np.array([p.width for p in self.peaks])

    def evaluate(self, x: np.ndarray) -> float:
        """Fitness at x: the max over cones. Counts one evaluation."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.params.dimensions,):
            raise ValueError(
                f"point has shape {x.shape}, expected ({self.params.dimensions},)"
            )
        self.eval_count += 1
        delta = self._centers - x
        dist = np.sqrt((delta * delta).sum(axis=1))
        return float((self._heights - self._widths * dist).max())

    def current_optimum(self) -> tuple[np.ndarray, float]:
        """Position and value of the global optimum. Free of evaluation cost.

        For cone peaks the optimum sits at the center of the highest peak:
        any other cone's value there is at most its own height, which is at
        most the maximum height.
        """
        best = max(self.peaks, key=lambda p: p.height)
        return best.center.copy(), float(best.height)

    def pending_change(self) -> bool:
        """True exactly when the next scheduled change is due. Pure query."""
        f = self.params.change_frequency
        return self.eval_count >= (self.change_count + 1) * f

    def apply_change(self) -> None:
        """Perturb every peak's height, width, and center.

        Per peak, in index order, the random stream is consumed as: one
        standard normal for height, one for width, then one uniform
        direction vector for the shift. Heights, widths, and centers are
        reflected back into their legal ranges; ``last_shift`` records the
        displacement actually applied after reflection.
        """
        p = self.params
        h_lo, h_hi = p.height_range
        w_lo, w_hi = p.width_range
        a_lo, a_hi = p.search_range
        lam = p.shift_correlation
        for peak in self.peaks:
            g_height = self.rng.standard_normal()
            g_width = self.rng.standard_normal()
            r = self.rng.uniform(-0.5, 0.5, size=p.dimensions)

            peak.height = _reflect(peak.height + p.height_severity * g_height, h_lo, h_hi)
            peak.width = _reflect(peak.width + p.width_severity * g_width, w_lo, w_hi)

            blend = (1.0 - lam) * r + lam * peak.last_shift
            norm = float(np.linalg.norm(blend))
            if norm > 0.0 and p.shift_length > 0.0:
                shift = p.shift_length * blend / norm
            else:
                shift = np.zeros(p.dimensions)
            old_center = peak.center
            peak.center = _reflect_vector(old_center + shift, a_lo, a_hi)
            peak.last_shift = peak.center - old_center
        self.change_count += 1
        self._sync_arrays()
