"""Tools for splitting graphs into pieces of strictly smaller diameter.

The package works with two graph flavors: abstract graphs under the hop
metric, and straight-line drawings in the plane under the shortest-path
metric over all points of the drawing (vertices and edge interiors alike).
For both, the central question is how few pieces a diameter-reducing
partition needs, and the modules here compute diameters, farthest point
pairs, line cuts, and the partition numbers themselves for several graph
families, together with file formats, a command line, and an exact
rational feasibility prover for the hardest structural lemma.
"""

__version__ = "0.1.0"
