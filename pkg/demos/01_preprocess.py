"""
Cleaning up a scanned character
===============================

Dark ink on a light, speckled page, off-center.  We smooth, threshold and
re-center it on a square canvas.
"""
import numpy as np

from noisychar import imagecore

rng = np.random.default_rng(0)
page = np.full((30, 40), 0.85) + rng.normal(0, 0.05, (30, 40))
page[6:20, 25:29] = 0.15          # the stroke
page[2, 3] = 0.1                  # an isolated speck
page = np.clip(page, 0, 1)

smooth = imagecore.nl_means(page, patch_radius=1, search_radius=3, strength=0.1)
t = imagecore.otsu_threshold(smooth)
print("otsu threshold (0..255):", t)

binary = imagecore.binarize(smooth, t, foreground_is_dark=True)
lab = imagecore.connected_components(binary)
print("components:", lab.n_components, "sizes:", lab.component_sizes[1:])

# the speck is dropped: only the largest component decides the crop
canvas = imagecore.standardize(page, border=4, nlm={"patch_radius": 1, "search_radius": 3})
print("canvas shape:", canvas.shape)
for row in canvas[::2]:
    print("".join("#" if v else "." for v in row[::2]))

# down to the canonical size used for features
small = imagecore.resample_nearest(canvas, 16, 16)
print("resampled:", small.shape, "foreground pixels:", int(small.sum()))
