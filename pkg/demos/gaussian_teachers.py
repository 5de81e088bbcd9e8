"""Few-shot classification on 2-d Gaussians with fine-tuned teachers.

Walks the full classification pipeline: generate the class soup,
pre-train a backbone on all meta-train classes, fine-tune per-task
teacher networks for the hardest tasks, then meta-train prototypical
networks under both protocols. Finishes by exporting decision-boundary
grids (trained model, Bayes oracle, frozen pre-trained trunk) for one
test episode; the JSON grids plot with any tool.

Run:
    python demos/gaussian_teachers.py [--full]
"""

import argparse

from metalab.harness import (
    cmd_build_targets,
    cmd_eval,
    cmd_export_boundary,
    cmd_gen_data,
    cmd_pretrain,
    cmd_train,
    default_run_config,
)


def config_for(args, **protocol):
    return default_run_config(
        "gaussian",
        "protonet",
        data_dir=args.data_dir,
        out_dir=args.out_dir,
        budget=None if args.full else 2000,
        **protocol,
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--data-dir", default="data")
    parser.add_argument("--out-dir", default="out")
    parser.add_argument("--full", action="store_true")
    args = parser.parse_args()

    cmd_gen_data(config_for(args), force=True)
    pre = cmd_pretrain(config_for(args), force=True)
    print(f"pre-trained backbone: {pre['log']['train_accuracy']:.3f} accuracy over all 64 classes")

    st = config_for(args, protocol="st", target_ratio=0.10)
    manifest = cmd_build_targets(st)
    print(f"teachers: {manifest['n_distinct']} fine-tuned nets cover "
          f"{manifest['n_selected']} hardest tasks")

    for config, label in ((config_for(args, protocol="sq"), "S/Q"), (st, "S/T 10%")):
        cmd_train(config, force=True)
        row = cmd_eval(config)
        print(f"{label:7s} meta-test accuracy {100 * float(row['accuracy_mean']):.2f}%")

    for source in ("checkpoint", "bayes", "pretrained"):
        report = cmd_export_boundary(st, episode_index=0, resolution=200, source=source)
        print(f"boundary grid ({source}) -> {report['path']}")


if __name__ == "__main__":
    main()
