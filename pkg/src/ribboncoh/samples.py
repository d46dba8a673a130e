"""Named reference graphs used across tests, docs, and the CLI.

Permutations are image tuples on dense half-edge labels.
"""
from .ribbon import RibbonGraph

# one edge, one 2-valent vertex, two boundaries (genus 0)
LOOP = RibbonGraph((1, 0), (1, 0))

# two vertices joined by two parallel edges (genus 0, two boundaries)
BANANA = RibbonGraph((1, 0, 3, 2), (2, 3, 0, 1))

# theta graph, genus-1 embedding: one boundary
THETA1 = RibbonGraph((1, 2, 0, 4, 5, 3), (3, 4, 5, 0, 1, 2))

# theta graph, planar embedding: three boundaries
THETA0 = RibbonGraph((1, 2, 0, 5, 3, 4), (3, 4, 5, 0, 1, 2))

# one 4-valent vertex with two edges (genus 1, one boundary)
DOUBLELOOP = RibbonGraph((1, 2, 3, 0), (2, 3, 0, 1))

# two loops joined by a bridge (genus 0, three boundaries)
DUMBBELL = RibbonGraph((1, 4, 3, 5, 0, 2), (1, 0, 3, 2, 5, 4))

# the 3-gon (genus 0, two boundaries)
TRIANGLE = RibbonGraph((5, 2, 1, 4, 3, 0), (1, 0, 3, 2, 5, 4))

NAMED = {
    "LOOP": LOOP,
    "BANANA": BANANA,
    "THETA1": THETA1,
    "THETA0": THETA0,
    "DOUBLELOOP": DOUBLELOOP,
    "DUMBBELL": DUMBBELL,
    "TRIANGLE": TRIANGLE,
}
