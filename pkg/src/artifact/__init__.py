"""Exact and numeric tools for the dynamics of regular polygons under piecewise isometries.

Submodules: ``cyclotomic`` (exact field arithmetic), ``geometry`` (First
Family construction), ``maps`` (tau, Df and the dual-center map), ``symbolic``
(itineraries, replay and periods), ``web`` (point clouds and segment webs),
``analysis`` (periods, mutations, edge classes, scaling), ``derivations``
(worked N = 11 derivations), ``render`` and ``cli``.
"""

__version__ = "0.1.0"
