#!/usr/bin/env python3
"""Sweep a decoder across channel noise levels and print a BER/FER table.

Example:

    python scripts/ber_sweep.py data/48A.edges --channel bsc \
        --params 0.01 0.02 0.05 0.1 --decoder sum-product --trials 20000
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from csg_ldpc.analysis import load_graph_file
from csg_ldpc.channel import AwgnChannel, BscChannel
from csg_ldpc.codes import build_code
from csg_ldpc.experiments import DECODER_NAMES, ExperimentConfig, run_experiment


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("graph", type=Path, help="graph file (.lcf or .edges)")
    parser.add_argument("--channel", choices=("bsc", "awgn"), default="bsc")
    parser.add_argument(
        "--params",
        type=float,
        nargs="+",
        required=True,
        help="crossover probabilities (bsc) or noise sigmas (awgn)",
    )
    parser.add_argument("--decoder", choices=DECODER_NAMES, default="sum-product")
    parser.add_argument("--trials", type=int, default=10_000)
    parser.add_argument("--max-iterations", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    code = build_code(load_graph_file(args.graph))
    print(f"# code [{code.n}, {code.k}] from {args.graph.name}, "
          f"{args.decoder}, {args.trials} trials per point")
    print(f"{'param':>8}  {'ber':>12}  {'fer':>12}  {'syndrome_mean':>14}")
    for param in args.params:
        channel = BscChannel(param) if args.channel == "bsc" else AwgnChannel(param)
        config = ExperimentConfig(
            h=code.H,
            channel=channel,
            decoder=args.decoder,
            trials=args.trials,
            master_seed=args.seed,
            max_iterations=args.max_iterations,
            worker_count=args.workers,
        )
        result = run_experiment(config)
        print(f"{param:>8g}  {result.ber:>12.3e}  {result.fer:>12.3e}  "
              f"{result.syndrome_mean:>14.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
