"""
Quadtree features and the saliency mask
=======================================
"""
import numpy as np

from noisychar import quadtree as qt

from _glyphs import glyphs

x, _ = glyphs(400, seed=0, side=16)

# one image: which blocks are split
splits = qt.decompose(x[0], tau=0.1, min_block=2)
print("blocks split in image 0:", len(splits))

# over the corpus: how often is each block a leaf?
dmap = qt.build_decomposition_map(x, tau=0.1, min_block=1, mode="leaf")
for d, g in enumerate(dmap.counts[:3]):
    print(f"depth {d} leaf recurrence\n", np.round(g / dmap.total_images, 2))

# keep the blocks that are neither almost never nor almost always leaves
for mu, nu in ((0.0, 1.0), (0.2, 0.8)):
    mask = qt.build_saliency_mask(dmap, mu, nu)
    print(f"mu={mu} nu={nu}: {len(mask)} features")

feats = qt.featurize_many(x[:5], mask)
print("feature matrix", feats.shape)

for row in qt.mask_image(mask)[::1]:
    print("".join("#" if v else "." for v in row))
