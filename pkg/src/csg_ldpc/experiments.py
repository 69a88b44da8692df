"""Monte-Carlo decoding experiments with reproducible per-trial seeding.

Every trial transmits the all-zero codeword and draws its noise from an
independent generator seeded by (master_seed, trial_index), so results
depend only on the seed and trial count, never on how trials are split
across workers.  Aggregation sums integers, which makes the reduction
order irrelevant and the output byte-stable.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channel import AwgnChannel, BscChannel, ChannelModel, llr_from_awgn, llr_from_bsc
from .decoders import GallagerADecoder, SumProductDecoder
from .gf2 import BitMatrix

__all__ = [
    "RNG_FAMILY",
    "ExperimentConfig",
    "ExperimentResult",
    "SyndromeStats",
    "trial_rng",
    "run_experiment",
    "syndrome_statistics",
    "random_regular_ldpc",
]

RNG_FAMILY = "numpy PCG64 seeded via SeedSequence((master_seed, trial_index))"

DECODER_NAMES = ("gallager-a", "sum-product")


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    """Independent generator for one trial; the split contract of the repo."""
    return np.random.default_rng((master_seed, trial_index))


@dataclass(frozen=True)
class ExperimentConfig:
    """One decoding experiment: parity check, channel, decoder, budget.

    ``max_iterations`` may be 0 to measure the raw channel (hard decisions
    only).  ``worker_count`` > 1 splits trials over processes without
    changing any number in the result.
    """

    h: BitMatrix
    channel: ChannelModel
    decoder: str
    trials: int
    master_seed: int
    max_iterations: int = 50
    worker_count: int = 1

    def __post_init__(self) -> None:
        if self.decoder not in DECODER_NAMES:
            raise ValueError(f"unknown decoder {self.decoder!r}, expected {DECODER_NAMES}")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be >= 0")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if self.master_seed < 0:
            raise ValueError("master_seed must be non-negative")


@dataclass(frozen=True)
class ExperimentResult:
    """Aggregate counts and rates over all trials."""

    trials: int
    bit_errors: int
    word_errors: int
    ber: float
    fer: float
    syndrome_mean: float
    syndrome_variance: float


def _run_range(cfg: ExperimentConfig, start: int, stop: int) -> tuple[int, int, int, int]:
    """Partial sums (bit errors, word errors, sum w, sum w^2) for one trial range."""
    if cfg.decoder == "gallager-a":
        decoder = GallagerADecoder(cfg.h)
    else:
        decoder = SumProductDecoder(cfg.h)
    n = cfg.h.ncols
    h_int = decoder.h_int
    bit_errors = 0
    word_errors = 0
    syn_sum = 0
    syn_sq = 0
    bsc = isinstance(cfg.channel, BscChannel)
    for trial in range(start, stop):
        rng = trial_rng(cfg.master_seed, trial)
        if bsc:
            hard = (rng.random(n) < cfg.channel.rho).astype(np.uint8)
        else:
            received = 1.0 + cfg.channel.sigma * rng.standard_normal(n)
            hard = (received < 0).astype(np.uint8)
        w = int(((h_int @ hard) & 1).sum())
        syn_sum += w
        syn_sq += w * w
        if cfg.decoder == "gallager-a":
            result = decoder.decode(hard, max_iter=cfg.max_iterations)
        else:
            if bsc:
                llr = llr_from_bsc(hard, cfg.channel.rho)
            else:
                llr = llr_from_awgn(received, cfg.channel.sigma)
            result = decoder.decode(llr, max_iter=cfg.max_iterations)
        errs = int(result.word.sum())
        bit_errors += errs
        word_errors += 1 if errs else 0
    return bit_errors, word_errors, syn_sum, syn_sq


def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    size, extra = divmod(trials, workers)
    spans = []
    start = 0
    for i in range(workers):
        stop = start + size + (1 if i < extra else 0)
        if stop > start:
            spans.append((start, stop))
        start = stop
    return spans


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Run all trials (optionally across processes) and aggregate exactly."""
    spans = _chunks(cfg.trials, cfg.worker_count)
    if cfg.worker_count == 1:
        partials = [_run_range(cfg, a, b) for a, b in spans]
    else:
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
            futures = [pool.submit(_run_range, cfg, a, b) for a, b in spans]
            partials = [f.result() for f in futures]
    bit_errors = sum(p[0] for p in partials)
    word_errors = sum(p[1] for p in partials)
    syn_sum = sum(p[2] for p in partials)
    syn_sq = sum(p[3] for p in partials)
    t = cfg.trials
    mean = syn_sum / t
    variance = (syn_sq - syn_sum * syn_sum / t) / (t - 1) if t > 1 else 0.0
    return ExperimentResult(
        trials=t,
        bit_errors=bit_errors,
        word_errors=word_errors,
        ber=bit_errors / (t * cfg.h.ncols),
        fer=word_errors / t,
        syndrome_mean=mean,
        syndrome_variance=variance,
    )


@dataclass(frozen=True)
class SyndromeStats:
    """Empirical syndrome-weight moments with resampling standard errors."""

    trials: int
    mean: float
    mean_stderr: float
    variance: float
    variance_stderr: float


def syndrome_statistics(
    h: BitMatrix,
    rho: float,
    trials: int,
    master_seed: int,
    stream_index: int = 0,
    bootstrap_rounds: int = 200,
) -> SyndromeStats:
    """Sample syndrome weights of BSC noise in bulk and summarize them.

    Noise is generated in batches from one stream per (master_seed,
    stream_index) pair, which keeps a million trials in the second range.
    The variance standard error comes from a multinomial bootstrap of the
    observed weight histogram.
    """
    if not 0.0 <= rho <= 0.5:
        raise ValueError(f"rho {rho} outside [0, 1/2]")
    if trials < 2:
        raise ValueError("need at least two trials")
    n = h.ncols
    m = h.nrows
    h_int = h.to_numpy().astype(np.int64)
    rng = np.random.default_rng((master_seed, stream_index, 0))
    counts = np.zeros(m + 1, dtype=np.int64)
    remaining = trials
    batch = 200_000
    while remaining:
        size = min(batch, remaining)
        errors = (rng.random((size, n)) < rho).astype(np.int64)
        weights = ((errors @ h_int.T) & 1).sum(axis=1)
        counts += np.bincount(weights, minlength=m + 1)
        remaining -= size
    values = np.arange(m + 1, dtype=np.float64)
    total = float(trials)
    mean = float(counts @ values) / total
    sum_sq = float(counts @ (values * values))
    variance = (sum_sq - total * mean * mean) / (total - 1.0)
    boot_rng = np.random.default_rng((master_seed, stream_index, 1))
    resampled = boot_rng.multinomial(trials, counts / total, size=bootstrap_rounds)
    boot_means = (resampled @ values) / total
    boot_sq = resampled @ (values * values)
    boot_vars = (boot_sq - total * boot_means**2) / (total - 1.0)
    return SyndromeStats(
        trials=trials,
        mean=mean,
        mean_stderr=float(np.sqrt(variance / total)),
        variance=variance,
        variance_stderr=float(np.std(boot_vars, ddof=1)),
    )


def random_regular_ldpc(n: int, m: int, w_c: int = 3, seed: int = 0) -> BitMatrix:
    """Random (w_c, w_r)-regular parity check by socket matching.

    Each check contributes n*w_c/m sockets; columns draw w_c sockets and
    redraw whenever a column would repeat a row.  Deterministic for a given
    seed.  4-cycles are allowed, callers who care should inspect the girth.
    """
    if n < 1 or m < 1 or w_c < 1:
        raise ValueError("dimensions must be positive")
    if (n * w_c) % m != 0:
        raise ValueError(f"infeasible degree sequence: {n}*{w_c} not divisible by {m}")
    w_r = n * w_c // m
    if w_r > n or w_c > m:
        raise ValueError("degree exceeds matrix dimension")
    rng = np.random.default_rng(seed)
    for _ in range(200):
        sockets = list(np.repeat(np.arange(m), w_r))
        columns: list[int] = []
        failed = False
        for _col in range(n):
            placed = None
            for _attempt in range(200):
                picks = rng.choice(len(sockets), size=w_c, replace=False)
                chosen = [sockets[i] for i in picks]
                if len(set(chosen)) == w_c:
                    placed = (sorted(picks, reverse=True), chosen)
                    break
            if placed is None:
                failed = True
                break
            for i in placed[0]:
                sockets.pop(i)
            bits = 0
            for row in placed[1]:
                bits |= 1 << int(row)
            columns.append(bits)
        if not failed:
            cols_matrix = BitMatrix(n, m, tuple(columns))
            return cols_matrix.transpose()
    raise RuntimeError("could not place all sockets without duplicate rows")
