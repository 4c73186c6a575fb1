"""
Pixel-wise reconstruction of noisy characters
=============================================

A two-class network labels each pixel from its filter-bank hypercolumn.
"""
import numpy as np

from noisychar import dbn, noise
from noisychar import reconstruct as rc

from _glyphs import glyphs

clean, _ = glyphs(60, seed=0)
truth = (clean * 255).astype(np.uint8)
noisy = np.stack(noise.noisy_corpus(clean, noise.NoiseSpec.awgn(seed=1))[0])

src = rc.FilterBankSource(scales=(1, 2))
print("hypercolumn length:", src.n_maps + 1)

corpora = {"awgn": (noisy[:40], truth[:40], None), "clean": (clean[:40], truth[:40], None)}
pool = rc.build_pixel_pool(corpora, src, rc.CrnSamplingPlan(20, 10, 200, seed=0))
print("pool:", pool.features.shape, "foreground fraction:", round(pool.foreground_fraction, 3))

cfg = dbn.TrainConfig(dbn.PretrainConfig(epochs=1), dbn.FinetuneConfig(epochs=10, learning_rate=1.0, dropout=0.0))
crn = rc.train_crn(pool, hidden=(20,), cfg=cfg)

recon = rc.reconstruct_many(noisy[40:], src, crn)
print("held-out metrics:", {k: round(v, 3) for k, v in rc.pixel_metrics(recon, truth[40:]).items()})

pic = rc.triptych(noisy[40], recon[0], truth[40])
for row in pic[::2]:
    print("".join(" .:-=+*#%@"[int(v) * 9 // 255] for v in row))
