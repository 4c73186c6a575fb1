"""
Three kinds of degradation
==========================
"""
import numpy as np

from noisychar import noise

img = np.full((64, 64), 0.5)

# white Gaussian noise at a target SNR, measured before clamping
rng = np.random.default_rng(1)
n = noise.awgn_noise(img, 9.5, rng)
print("measured SNR dB:", round(10 * np.log10(np.mean(img**2) / np.mean(n**2)), 3))

# a motion kernel is the length of a line segment falling in each cell
k = noise.motion_kernel(5, 15.0)
print("kernel", k.shape, "sums to", k.sum())
print(np.round(k, 3))

from _glyphs import glyphs

x, _ = glyphs(1, seed=4)
for spec in (noise.NoiseSpec.awgn(seed=3), noise.NoiseSpec.contrast(seed=3), noise.NoiseSpec("motion", seed=3)):
    out = noise.apply_noise(x[0], spec, seed=0)
    print(f"{spec.kind:9s} range [{out.min():.2f}, {out.max():.2f}]  mean {out.mean():.3f}")

# corpora are reproducible per image id, whatever the order of generation
a, manifest = noise.noisy_corpus(x, noise.NoiseSpec.awgn(seed=9), ids=[42])
b, _ = noise.noisy_corpus(x, noise.NoiseSpec.awgn(seed=9), ids=[42])
print("same image, same id, same noise:", np.array_equal(a[0], b[0]))
print("checksum:", manifest["checksums"][0][:16])
