"""Error estimation for correlated Monte Carlo series.

Plain means get a blocked standard error; the log-domain ensemble average
ln<exp(x)> gets a delete-block jackknife, which both respects the
nonlinearity of the estimator and absorbs autocorrelation on the block
scale.
"""

import numpy as np

from .errors import DomainError

N_BLOCKS = 16


def blocked_stderr(x, n_blocks: int = N_BLOCKS) -> float | None:
    """Standard error of the mean from block means.

    Returns None for fewer than two samples (no error estimate available).
    """
    x = np.asarray(x, dtype=float)
    if x.size < 2:
        return None
    nb = min(n_blocks, x.size)
    means = np.array([b.mean() for b in np.array_split(x, nb)])
    return float(means.std(ddof=1) / np.sqrt(nb))


def logmeanexp(x) -> float:
    """ln(mean(exp(x))), computed stably via the usual max shift."""
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        raise DomainError("logmeanexp of an empty sample set")
    shift = float(x.max())
    if not np.isfinite(shift):
        return shift
    return shift + float(np.log(np.exp(x - shift).mean()))


def jackknife_logmeanexp(x, n_blocks: int = N_BLOCKS) -> tuple[float, float | None]:
    """ln(mean(exp(x))) with a delete-block jackknife standard error.

    Each block is removed in turn and the estimator recomputed on the
    remainder; the spread of the leave-one-block-out values gives the
    error. Returns (estimate, stderr); stderr is None for a single sample.
    """
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        raise DomainError("jackknife over an empty sample set")
    est = logmeanexp(x)
    n = x.size
    if n < 2:
        return est, None
    nb = min(n_blocks, n)
    shift = float(x.max())
    w = np.exp(x - shift)
    total = w.sum()
    thetas = np.empty(nb)
    for k, block in enumerate(np.array_split(w, nb)):
        remaining = total - block.sum()
        n_rem = n - block.size
        with np.errstate(divide="ignore"):
            thetas[k] = shift + np.log(remaining / n_rem)
    var = (nb - 1) / nb * np.sum((thetas - thetas.mean()) ** 2)
    return est, float(np.sqrt(var))
