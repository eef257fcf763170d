"""clearshape: 3D reconstruction of transparent objects.

Reconstructs the full surface of a transparent object from two kinds of
capture data: per-view silhouettes and refractive ray-ray correspondences.
Ships with a capture simulator so the whole pipeline runs on synthetic
scenes end to end.
"""

__version__ = "0.1.0"
