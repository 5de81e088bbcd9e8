"""How many target models are enough, and which tasks deserve them.

Sweeps the number of tasks that get a target model (0, 5% hard-selected,
5% random) and prints the MSE improvement each buys over the no-target
baseline. The point of the exercise: when the targets go to the tasks a
hardness heuristic ranks steepest, a 5% budget recovers most of the
full-coverage gain; spent uniformly at random it can buy nothing.

Run:
    python demos/target_budget.py [--algorithm maml|protoreg] [--full]
"""

import argparse

from metalab.harness import cmd_build_targets, cmd_eval, cmd_gen_data, cmd_train, default_run_config


def run_point(args, **protocol):
    config = default_run_config(
        "sinusoid",
        args.algorithm,
        data_dir=args.data_dir,
        out_dir=args.out_dir,
        budget=None if args.full else 2000,
        **protocol,
    )
    if config.protocol.protocol == "st":
        cmd_build_targets(config)
    cmd_train(config, force=True)
    return float(cmd_eval(config)["mse_noisy_mean"])


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--algorithm", choices=("maml", "protoreg"), default="maml")
    parser.add_argument("--data-dir", default="data")
    parser.add_argument("--out-dir", default="out")
    parser.add_argument("--full", action="store_true")
    args = parser.parse_args()

    cmd_gen_data(default_run_config("sinusoid", args.algorithm,
                                    data_dir=args.data_dir, out_dir=args.out_dir), force=True)
    base = run_point(args, protocol="sq")
    print(f"{args.algorithm}: no targets          MSE {base:.3f}")
    for mode in ("hardness", "random"):
        mse = run_point(args, protocol="st", lam=0.5, target_ratio=0.05, selection_mode=mode)
        print(f"{args.algorithm}: 5% targets, {mode:8s} MSE {mse:.3f}  (improvement {base - mse:+.3f})")


if __name__ == "__main__":
    main()
