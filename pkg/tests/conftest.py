import random

import pytest

from cyclechords import Augmentation, Cycle, Graph, LinearForest, build_graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


def random_min_degree_graph(rng: random.Random, n: int, p: float, dmin: int) -> Graph:
    """Random graph patched up to minimum degree dmin by adding random edges."""
    assert dmin < n
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for v in range(n):
        while deg[v] < dmin:
            w = rng.randrange(n)
            e = (min(v, w), max(v, w))
            if w == v or e in edges:
                continue
            edges.add(e)
            deg[v] += 1
            deg[w] += 1
    return build_graph(n, sorted(edges))


def planted_augmentation_instance(rng: random.Random, n: int):
    """Random graph with a planted cycle and a valid two-vertex insertion.

    Returns (graph, cycle, forest, augmentation) or None when the sampled
    positions collide; the forest is a random cycle edge off the exchanged
    segments (or empty).
    """
    k = rng.randrange(4, n - 1)
    verts = list(range(n))
    rng.shuffle(verts)
    cyc_verts = verts[:k]
    u, v = verts[k], verts[k + 1]
    edges = {tuple(sorted((cyc_verts[i], cyc_verts[(i + 1) % k]))) for i in range(k)}
    i, j = sorted(rng.sample(range(k), 2))
    attach = {cyc_verts[i], cyc_verts[(i + 1) % k], cyc_verts[j], cyc_verts[(j + 1) % k]}
    if len(attach) != 4:
        return None
    edges.add(tuple(sorted((u, cyc_verts[i]))))
    edges.add(tuple(sorted((u, cyc_verts[j]))))
    edges.add(tuple(sorted((v, cyc_verts[(i + 1) % k]))))
    edges.add(tuple(sorted((v, cyc_verts[(j + 1) % k]))))
    for _ in range(rng.randrange(0, 2 * n)):
        a, b = rng.sample(range(n), 2)
        edges.add(tuple(sorted((a, b))))
    graph = build_graph(n, sorted(edges))
    cyc = Cycle(tuple(cyc_verts))
    forbidden = {
        tuple(sorted((cyc_verts[i], cyc_verts[(i + 1) % k]))),
        tuple(sorted((cyc_verts[j], cyc_verts[(j + 1) % k]))),
    }
    pool = [e for e in cyc.edges() if e not in forbidden]
    forest = (
        LinearForest.from_edge(*rng.choice(pool))
        if pool and rng.random() < 0.7
        else LinearForest.empty()
    )
    return graph, cyc, forest, Augmentation(u, v, i, j)


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
