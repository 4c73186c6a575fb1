"""
Pretraining and fine-tuning a small deep belief network
=======================================================
"""
import numpy as np

from noisychar import dbn

from _glyphs import glyphs

x, y = glyphs(600, seed=0, side=12)
x = x.reshape(len(x), -1)
xt, yt = glyphs(200, seed=1, side=12)
xt = xt.reshape(len(xt), -1)

cfg = dbn.TrainConfig(
    dbn.PretrainConfig(epochs=3, batch_size=32),
    dbn.FinetuneConfig(epochs=40, learning_rate=1.0, batch_size=32, dropout=0.0, patience=40),
    seed=0,
)
rng = np.random.default_rng(cfg.seed)
model = dbn.dbn_pretrain(x, [32, 16], 3, cfg, rng)
print("architecture:", model.architecture)
print("mean NLL before fine-tuning:", round(dbn.nll_loss(model, xt, yt)[0] / len(yt), 4))

model, hist = dbn.dbn_finetune(model, x, y, xt, yt, cfg.finetune, rng)
print("mean NLL after:", round(dbn.nll_loss(model, xt, yt)[0] / len(yt), 4))
print("test error:", np.mean(dbn.dbn_predict_labels(model, xt) != yt))

# models round-trip through a small binary file
import tempfile, pathlib

p = pathlib.Path(tempfile.mkdtemp()) / "m.dbnm"
dbn.save_model(p, model)
back = dbn.load_model(p)
print("reload identical:", all(np.array_equal(a, b) for a, b in zip(model.weights, back.weights)))
