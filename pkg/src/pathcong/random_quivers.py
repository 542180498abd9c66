"""Seeded random acyclic quivers for the verification harness."""

from __future__ import annotations

import random

from .quiver import Quiver, enumerate_paths


def random_acyclic_quiver(
    rng: random.Random,
    max_vertices: int = 4,
    max_arrows: int = 5,
    max_elements: int = 20,
) -> Quiver:
    """Draw a uniform DAG over a fixed topological order.

    Arrows only run forward along the vertex order, so the result is
    acyclic by construction; parallel arrows are allowed.  Draws are
    rejected (and redrawn from the same stream) until the path semigroup
    fits within ``max_elements``.
    """
    while True:
        nv = rng.randint(1, max_vertices)
        vertices = [f"v{i}" for i in range(1, nv + 1)]
        arrows = []
        if nv > 1:
            for k in range(rng.randint(0, max_arrows)):
                i, j = sorted(rng.sample(range(nv), 2))
                arrows.append((f"a{k + 1}", vertices[i], vertices[j]))
        q = Quiver(vertices, arrows)
        if len(enumerate_paths(q)) + 1 <= max_elements:
            return q


def random_suite(
    trials: int,
    seed: int = 0,
    max_vertices: int = 4,
    max_arrows: int = 5,
    max_elements: int = 20,
) -> list[Quiver]:
    """A reproducible list of random quivers from one seeded stream."""
    rng = random.Random(seed)
    return [
        random_acyclic_quiver(rng, max_vertices, max_arrows, max_elements)
        for _ in range(trials)
    ]
