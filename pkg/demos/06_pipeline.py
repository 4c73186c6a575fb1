"""
The whole pipeline from the command line
========================================

Writes a tiny IDX corpus, then runs every stage with the CLI.
"""
import json
import pathlib
import tempfile

import numpy as np
import yaml

from noisychar import cli, io

from _glyphs import glyphs

work = pathlib.Path(tempfile.mkdtemp())
for prefix, n, seed in (("train", 200, 0), ("t10k", 60, 1)):
    x, y = glyphs(n, seed)
    io.write_idx(work / f"{prefix}-images-idx3-ubyte", (255 - x * 255).astype(np.uint8))
    io.write_idx(work / f"{prefix}-labels-idx1-ubyte", y.astype(np.uint8))

fast = {"pretrain": {"epochs": 1}, "finetune": {"epochs": 40, "learning_rate": 1.0, "batch_size": 16, "dropout": 0.0, "patience": 40}}
cfg = {
    "name": "demo",
    "canonical_size": 16,
    "dataset": {"root": str(work), "classes": 3, "foreground_is_dark": True,
                "splits": {"counts": {"train": 150, "valid": 30, "test": 40}}},
    "preprocess": {"border": 2, "nlm": {"patch_radius": 1, "search_radius": 2}},
    "noise": [{"kind": "awgn", "snr_db": 9.5}, {"kind": "contrast"}, {"kind": "motion"}],
    "crn": {"architecture": [16], "source": {"type": "filterbank", "scales": [1, 2]},
            "plan": {"per_noisy_images": 10, "clean_images": 5, "pixels_per_image": 64}, "train": fast},
    "quadtree": {"min_block": 1, "recurrence_mode": "leaf", "mu": 0.02, "nu": 0.98},
    "ccn": {"architectures": {"awgn": [24], "contrast": [24], "motion": [24]}, "train": fast,
            "baselines": {"raw": ["awgn"]}},
}
(work / "demo.yaml").write_text(yaml.safe_dump(cfg))

out = work / "run"
code = cli.main(["run", "--config", str(work / "demo.yaml"), "--seed", "1", "--out", str(out)])
print("exit code", code)
rep = json.loads((out / "report.json").read_text())
for kind, e in rep["corpora"].items():
    print(f"{kind:9s} error {e['ccn']['error_pct']:5.1f}%  features {e['features']}")

# a second invocation with --resume finds every stage up to date
cli.main(["run", "--config", str(work / "demo.yaml"), "--seed", "1", "--out", str(out), "--resume"])
cli.main(["report", "--out", str(out), "--format", "markdown"])
