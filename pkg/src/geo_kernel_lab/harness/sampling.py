"""
Sampling Module

Seeded samplers for every space kind, graph builders and planted
witness configurations.

Key Features:
- Counter-based Philox substreams: element i of a sample is drawn from
  substream i of the seed, so a sample of size n is a prefix of every
  larger sample with the same seed and parallel draws match sequential ones
- SPD samples G^T G + 1e-3 I, Grassmann samples by QR of Gaussian
  matrices, hyperbolic samples through the exponential map at the base point
- epsilon-neighbourhood and symmetrized kNN graphs on Euclidean clouds
- Planted configurations realizing the K_{2,3} path metric (strings,
  graphs, l_q vectors) used as negative-type witnesses

Dependencies:
    - numpy: Philox bit generator and linear algebra
    - networkx: minimum spanning trees
"""

from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix
from geo_kernel_lab.common.errors import UnsupportedOperationError, ValidationError
from geo_kernel_lab.common.PointSet import PointSet
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec
from geo_kernel_lab.common.WeightedGraph import WeightedGraph
from geo_kernel_lab.config.logging_config import LoggingConfig
from geo_kernel_lab.manifolds.graphs import require_connected
from geo_kernel_lab.manifolds.hyperbolic import hyperbolic_exp_at_origin

logger = LoggingConfig.get_logger(__name__)

SPD_RIDGE = 1e-3
NORMAL_LOG_SIGMA_SCALE = 0.5
CLUSTER_CENTERS = ((-1.5, 0.0), (1.5, 0.0))
CLUSTER_SCALE = 0.5
TREE_WEIGHT_RANGE = (0.5, 2.0)
STRING_ALPHABET = "abcd"
STRING_LENGTH_RANGE = (3, 8)

# K_{2,3}: vertices 0, 1 on one side, 2, 3, 4 on the other
K23_EDGES = [(a, b, 1.0) for a in (0, 1) for b in (2, 3, 4)]
K23_STRINGS = ("ab", "ba", "a", "aba", "bab")


def substream(seed: int, index: int) -> np.random.Generator:
    """Generator for element ``index`` of the sample drawn with ``seed``."""
    sequence = np.random.SeedSequence(int(seed), spawn_key=(int(index),))
    return np.random.Generator(np.random.Philox(sequence))


def _draw_point(space: SpaceSpec, rng: np.random.Generator) -> np.ndarray:
    kind, dim = space.kind, space.dim
    if kind in (SpaceKind.EUCLIDEAN, SpaceKind.LQ):
        return rng.standard_normal(dim)
    if kind in (SpaceKind.SPHERE, SpaceKind.PROJECTIVE):
        x = rng.standard_normal(dim)
        return x / np.linalg.norm(x)
    if kind is SpaceKind.HYPERBOLIC:
        return hyperbolic_exp_at_origin(rng.standard_normal(dim))
    if kind is SpaceKind.SPD:
        g = rng.standard_normal((dim, dim))
        a = g.T @ g + SPD_RIDGE * np.eye(dim)
        return 0.5 * (a + a.T)
    if kind is SpaceKind.GRASSMANN:
        q, _ = np.linalg.qr(rng.standard_normal((dim, space.subspace_dim)))
        return q
    if kind is SpaceKind.NORMAL:
        mu = rng.standard_normal()
        sigma = np.exp(NORMAL_LOG_SIGMA_SCALE * rng.standard_normal())
        return np.array([mu, sigma])
    raise UnsupportedOperationError(
        f"sample_points does not sample {kind.value} spaces; use the "
        f"dedicated builders (random_tree, sample_strings, two_cluster_cloud)")


def sample_points(space: SpaceSpec, n: int, seed: int) -> PointSet:
    """
    Draw ``n`` points of a continuous space.

    Raises:
        ValidationError: n < 1
        UnsupportedOperationError: graph, tree or string kinds
    """
    if int(n) < 1:
        raise ValidationError(f"sample size must be at least 1, got {n}")
    points = [_draw_point(space, substream(seed, i)) for i in range(int(n))]
    logger.debug("Sampled %d points of %s with seed %d", n, space.describe(), seed)
    return PointSet(space, points)


def two_cluster_cloud(n: int, seed: int) -> PointSet:
    """2-D Gaussian mixture; point i belongs to cluster i mod 2."""
    if int(n) < 2:
        raise ValidationError(f"a cloud needs at least 2 points, got {n}")
    points = []
    for i in range(int(n)):
        center = np.asarray(CLUSTER_CENTERS[i % 2])
        points.append(center + CLUSTER_SCALE * substream(seed, i).standard_normal(2))
    return PointSet(SpaceSpec(SpaceKind.EUCLIDEAN, dim=2), points)


def _euclidean_matrix(points: PointSet) -> np.ndarray:
    if points.space.kind is not SpaceKind.EUCLIDEAN:
        raise ValidationError(
            f"neighbour graphs need euclidean points, got {points.space.describe()}")
    x = np.vstack(points.elements)
    return np.sqrt(np.maximum(
        np.sum((x[:, None, :] - x[None, :, :]) ** 2, axis=-1), 0.0))


def epsilon_for_connectivity(points: PointSet, margin: float = 1.05) -> float:
    """
    Smallest connecting radius times ``margin``.

    The longest edge of a Euclidean minimum spanning tree is the least
    epsilon whose neighbourhood graph is connected.
    """
    d = _euclidean_matrix(points)
    if d.shape[0] < 2:
        raise ValidationError("need at least 2 points to choose epsilon")
    complete = nx.from_numpy_array(d)
    tree = nx.minimum_spanning_tree(complete, weight="weight")
    bottleneck = max(w for _, _, w in tree.edges(data="weight"))
    return float(bottleneck * margin)


def build_neighbor_graph(points: PointSet, epsilon: Optional[float] = None,
                         k: Optional[int] = None) -> WeightedGraph:
    """
    Epsilon-neighbourhood or symmetrized kNN graph weighted by Euclidean distance.

    Args:
        points (PointSet): At least 2 Euclidean points
        epsilon (float): Join pairs at distance <= epsilon
        k (int): Join each point to its k nearest neighbours

    Raises:
        ValidationError: neither or both rules given, or invalid values
        DisconnectedGraphError: the graph is disconnected
    """
    if (epsilon is None) == (k is None):
        raise ValidationError("give exactly one of epsilon or k")
    d = _euclidean_matrix(points)
    n = d.shape[0]
    if n < 2:
        raise ValidationError(f"a neighbour graph needs at least 2 points, got {n}")

    if epsilon is not None:
        if not epsilon > 0.0:
            raise ValidationError(f"epsilon must be positive, got {epsilon}")
        mask = (d <= epsilon) & (d > 0.0)
        hint = f"increase epsilon above {epsilon:g}"
    else:
        if not 1 <= int(k) < n:  # type: ignore[arg-type]
            raise ValidationError(f"k must lie in [1, {n - 1}], got {k}")
        order = np.argsort(d, axis=1, kind="stable")[:, 1:int(k) + 1]  # type: ignore[arg-type]
        mask = np.zeros_like(d, dtype=bool)
        mask[np.repeat(np.arange(n), order.shape[1]), order.ravel()] = True
        mask = (mask | mask.T) & (d > 0.0)
        hint = f"increase k above {k}"

    edges = [(int(i), int(j), float(d[i, j]))
             for i, j in np.argwhere(np.triu(mask, k=1))]
    graph = WeightedGraph(n, edges)
    require_connected(graph.to_networkx(), hint)
    return graph


def random_tree(n: int, seed: int) -> PointSet:
    """Random recursive tree: vertex i > 0 hangs from a uniform earlier vertex."""
    if int(n) < 1:
        raise ValidationError(f"a tree needs at least 1 vertex, got {n}")
    edges = []
    for i in range(1, int(n)):
        rng = substream(seed, i)
        parent = int(rng.integers(0, i))
        edges.append((parent, i, float(rng.uniform(*TREE_WEIGHT_RANGE))))
    tree = WeightedGraph(int(n), edges)
    return PointSet(SpaceSpec(SpaceKind.TREE), list(range(int(n))), graph=tree)


def sample_strings(n: int, seed: int, alphabet: str = STRING_ALPHABET,
                   exclude: Sequence[str] = ()) -> List[str]:
    """
    ``n`` distinct random strings.

    String i is drawn from substream i, redrawing on collisions with
    earlier strings or with ``exclude``.
    """
    if len(alphabet) ** STRING_LENGTH_RANGE[1] < int(n) + len(exclude):
        raise ValidationError(f"cannot draw {n} distinct strings over {alphabet!r}")
    seen = set(exclude)
    strings = []
    for i in range(int(n)):
        rng = substream(seed, i)
        while True:
            length = int(rng.integers(STRING_LENGTH_RANGE[0], STRING_LENGTH_RANGE[1] + 1))
            word = "".join(rng.choice(list(alphabet), size=length))
            if word not in seen:
                break
        seen.add(word)
        strings.append(word)
    return strings


def k23_strings() -> List[str]:
    """Five strings whose edit distances form the K_{2,3} path metric."""
    return list(K23_STRINGS)


def k23_graph() -> WeightedGraph:
    return WeightedGraph(5, K23_EDGES)


def frechet_embedding(distances: DistanceMatrix) -> np.ndarray:
    """
    Rows of D as vectors: x_i = D[i, :].

    The map is an isometry into l_infinity; in l_q with large q it stays close.
    """
    return np.array(distances.entries, dtype=float)


def k23_lq_points(q_norm: float) -> PointSet:
    """The Frechet embedding of K_{2,3} as points of l_q^5."""
    graph_metric = np.array([[0, 2, 1, 1, 1],
                             [2, 0, 1, 1, 1],
                             [1, 1, 0, 2, 2],
                             [1, 1, 2, 0, 2],
                             [1, 1, 2, 2, 0]], dtype=float)
    vectors = frechet_embedding(DistanceMatrix(graph_metric))
    return PointSet(SpaceSpec(SpaceKind.LQ, dim=5, q_norm=q_norm), list(vectors))


def attach_graph(base: WeightedGraph, extra: WeightedGraph,
                 bridge: Tuple[int, int, float]) -> WeightedGraph:
    """
    Disjoint union of two graphs joined by a single bridge edge.

    Vertices of ``extra`` are renumbered after those of ``base``; the
    bridge joins base vertex ``bridge[0]`` to extra vertex ``bridge[1]``.
    Shortest paths inside either part are unchanged.
    """
    offset = base.vertex_count
    edges = list(base.edges)
    edges.extend((u + offset, v + offset, w) for u, v, w in extra.edges)
    edges.append((bridge[0], bridge[1] + offset, bridge[2]))
    return WeightedGraph(offset + extra.vertex_count, edges)


def build_point_set(space: SpaceSpec, n: int, seed: int,
                    epsilon: Optional[float] = None,
                    knn: Optional[int] = None) -> PointSet:
    """
    Sample ``n`` points of any space kind.

    Graph samples are the vertices of a neighbour graph on a two-cluster
    cloud (epsilon chosen by ``epsilon_for_connectivity`` when neither
    rule is given); tree samples are all vertices of a random tree;
    string samples are distinct random strings.
    """
    if space.kind is SpaceKind.GRAPH:
        cloud = two_cluster_cloud(n, seed)
        if epsilon is None and knn is None:
            epsilon = epsilon_for_connectivity(cloud)
            logger.info("Chose epsilon=%.6g for a connected neighbour graph", epsilon)
        graph = build_neighbor_graph(cloud, epsilon=epsilon, k=knn)
        return PointSet(space, list(range(int(n))), graph=graph)
    if space.kind is SpaceKind.TREE:
        return random_tree(n, seed)
    if space.kind is SpaceKind.STRING:
        return PointSet(space, sample_strings(n, seed))
    return sample_points(space, n, seed)
