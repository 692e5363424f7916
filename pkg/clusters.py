# -*- coding: utf-8 -*-
"""
Küme Analizi
Bağlı bileşenler, en büyük küme, yerel kümeler C_ℓ(x), yoğun noktalar
ve K-blok yeniden normalizasyonu.
"""

from imports import *
from errors import InvalidInputError
from lattice import BoxSpec, NormKind, as_point, norm_array, PDIST_METRIC


# ============================================================================
# AYRIK KÜMELER (UNION-FIND)
# ============================================================================
class DisjointSet:
    """
    Yol sıkıştırmalı, boyuta göre birleştirmeli union-find.
    Kanonik etiketleme birleştirme sırasından bağımsızdır; sonradan uygulanır.
    """

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, a):
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b):
        """İki kümeyi birleştirir; zaten aynıysa False döner."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def roots(self):
        return [self.find(a) for a in range(len(self.parent))]

    def largest_size(self):
        if not self.parent:
            return 0
        return max(self.size[r] for r in set(self.roots()))


# ============================================================================
# ETİKETLEME
# ============================================================================
@dataclass(frozen=True, eq=False)
class Labeling:
    """
    Site başına bileşen kimliği. Kimlikler en küçük site indeksine göre sıralıdır;
    en büyük bileşen, en büyük boyutlular içinde en küçük kimliklidir.
    """
    labels: np.ndarray
    sizes: np.ndarray
    largest: int

    @property
    def component_count(self):
        return int(len(self.sizes))

    @property
    def largest_size(self):
        return int(self.sizes[self.largest])

    @property
    def site_count(self):
        return int(len(self.labels))

    def members(self, component):
        return np.flatnonzero(self.labels == component)

    def same_component(self, a, b):
        return bool(self.labels[a] == self.labels[b])

    def in_largest(self, index):
        return bool(self.labels[index] == self.largest)


def _canonical(raw):
    """Ham etiketleri ilk görünme sırasına göre 0..k-1 aralığına taşır."""
    raw = np.asarray(raw)
    if len(raw) == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    _, first, inverse = np.unique(raw, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind='stable')] = np.arange(len(first), dtype=np.int64)
    labels = rank[inverse.reshape(-1)]
    return labels, np.bincount(labels)


def label_components(graph, method="csgraph"):
    """
    Tüm kenarlar üzerinden bağlı bileşenler.

    Args:
        graph (GraphSample): Örnek
        method (str): 'csgraph' (scipy) veya 'union-find'

    Returns:
        Labeling: Kanonik etiketleme
    """
    if method == "csgraph":
        _, raw = csgraph.connected_components(graph.adjacency, directed=False)
    elif method == "union-find":
        ds = DisjointSet(graph.site_count)
        for a, b in graph.edges.tolist():
            ds.union(a, b)
        raw = ds.roots()
    else:
        raise InvalidInputError(f"unknown labeling method: {method!r}")

    labels, sizes = _canonical(raw)
    largest = int(np.argmax(sizes))
    return Labeling(labels, sizes, largest)


def largest_component_fraction(graph, labeling=None):
    """|C_L| / L^d"""
    labeling = label_components(graph) if labeling is None else labeling
    return labeling.largest_size / graph.site_count


# ============================================================================
# YEREL KÜMELER
# ============================================================================
def _check_ell(ell):
    if isinstance(ell, bool) or not isinstance(ell, (int, np.integer)) or ell < 1 or ell % 2 == 0:
        raise InvalidInputError(f"window side ell must be a positive odd integer, got {ell!r}")
    return int(ell)


def _local_cluster_indices(graph, index, half):
    """Λ_ℓ(x) içinde kalan kenarlarla x'ten BFS; site indeksleri listesi."""
    coords = graph.coords
    center = coords[index]
    seen = {index}
    queue = deque([index])
    while queue:
        current = queue.popleft()
        nbrs = graph.neighbors(current)
        if len(nbrs) == 0:
            continue
        inside = nbrs[np.all(np.abs(coords[nbrs] - center) <= half, axis=1)]
        for nb in inside.tolist():
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return seen


def local_cluster(graph, x, ell):
    """
    C_ℓ(x): x'e Λ_ℓ(x) içinde kalan yollarla bağlı siteler (x dahil).

    Args:
        graph (GraphSample): Örnek
        x: Kutu içi nokta
        ell (int): Tek pencere kenarı

    Returns:
        set: Nokta kümesi
    """
    ell = _check_ell(ell)
    x = as_point(x, graph.box.d)
    if not graph.box.contains(x):
        raise InvalidInputError(f"site {x} is outside the sample box")
    found = _local_cluster_indices(graph, graph.box.index_of(x), (ell - 1) // 2)
    return {graph.box.point_of(i) for i in found}


def _check_rho(rho):
    if not (isinstance(rho, (int, float, np.integer, np.floating)) and 0 < rho <= 1):
        raise InvalidInputError(f"density threshold rho must lie in (0, 1], got {rho!r}")
    return float(rho)


def is_dense(graph, x, rho, ell):
    """|C_ℓ(x)| ≥ ρ ℓ^d"""
    rho = _check_rho(rho)
    cluster = local_cluster(graph, x, ell)
    return len(cluster) >= rho * ell ** graph.box.d


@dataclass(frozen=True)
class DenseReport:
    region: BoxSpec
    rho: float
    ell: int
    dense_sites: frozenset
    count: int
    clipped_sites: frozenset = frozenset()

    @property
    def fraction(self):
        return self.count / self.region.site_count

    def to_dict(self):
        return {
            'region': {'lower': list(self.region.lower), 'side': self.region.side},
            'rho': self.rho,
            'ell': self.ell,
            'count': self.count,
            'fraction': self.fraction,
            'clipped': len(self.clipped_sites),
        }


def dense_set(graph, region, rho, ell, waive_margin=False, dense_cache=None):
    """
    Bölgedeki (ρ, ℓ)-yoğun siteler.

    Kenar payı yarım penceredir: bölge örnek kutusunun her yüzünden en az
    (ℓ−1)/2 site içeride olmalıdır, böylece her Λ_ℓ(x) penceresi kutuya sığar.
    ℓ kadar pay istenmez; daha geniş pay isteyen çağıran bölgeyi daraltır.

    Args:
        graph (GraphSample): Örnek
        region (BoxSpec): Örnek kutusunun içinde bölge
        rho (float): Yoğunluk eşiği
        ell (int): Tek pencere kenarı
        waive_margin (bool): Pencereler kutudan taşabilir (taşanlar raporlanır)
        dense_cache (dict, optional): indeks -> bool önbelleği

    Returns:
        DenseReport: Yoğun siteler
    """
    rho = _check_rho(rho)
    ell = _check_ell(ell)
    box = graph.box
    if not box.contains_box(region):
        raise InvalidInputError("dense-set region must lie inside the sample box")

    half = (ell - 1) // 2
    fits = all(
        lo - half >= blo and hi + half <= bhi
        for lo, hi, blo, bhi in zip(region.lower, region.upper, box.lower, box.upper)
    )
    if not fits and not waive_margin:
        raise InvalidInputError(
            f"region needs a margin of {half} sites inside the sample box; pass waive_margin=True to clip"
        )

    threshold = rho * ell ** box.d
    indices = box.indices_of(region.coords_array())
    coords = graph.coords
    lower = np.asarray(box.lower)
    upper = np.asarray(box.upper)
    cache = {} if dense_cache is None else dense_cache

    dense, clipped = [], []
    for index in indices.tolist():
        c = coords[index]
        if np.any(c - half < lower) or np.any(c + half > upper):
            clipped.append(tuple(int(v) for v in c))
        if index not in cache:
            cache[index] = len(_local_cluster_indices(graph, index, half)) >= threshold
        if cache[index]:
            dense.append(tuple(int(v) for v in c))

    if clipped:
        logging.warning(f"⚠️ {len(clipped)} sitenin penceresi kutu sınırında kırpıldı")
    return DenseReport(region, rho, ell, frozenset(dense), len(dense), frozenset(clipped))


# ============================================================================
# BLOK YENİDEN NORMALİZASYONU
# ============================================================================
@dataclass(frozen=True, eq=False)
class BlockGraph:
    """
    K-blok grafı. Blok indeksleri sözlük sırasındadır.
    chosen: her bloğun seçilmiş iç bileşen kimliği (blok içi kanonik etiketleme)
    edges: (m, 2) dolu blok çiftleri, i < j
    """
    K: int
    delta: float
    side: int
    d: int
    norm: NormKind
    s: object
    occupied: np.ndarray
    chosen: np.ndarray
    chosen_size: np.ndarray
    edges: np.ndarray

    @property
    def blocks_per_axis(self):
        return self.side // self.K

    @property
    def block_count(self):
        return int(len(self.occupied))

    @property
    def occupancy_rate(self):
        return float(np.mean(self.occupied))

    def block_coords(self):
        m = self.blocks_per_axis
        return np.indices((m,) * self.d, dtype=np.int64).reshape(self.d, -1).T

    def edge_set(self):
        return {(int(a), int(b)) for a, b in self.edges}

    def geometry(self):
        return (self.K, self.side, self.d, self.norm)

    def to_dict(self):
        return {
            'K': self.K,
            'delta': self.delta,
            'blocks': self.block_count,
            'occupied': int(np.count_nonzero(self.occupied)),
            'edges': int(len(self.edges)),
        }


def block_renormalize(graph, K, delta):
    """
    Kutuyu K-bloklara böler; her blokta en büyük iç bileşeni seçer (eşitlikte
    sözlük sırasında en küçük siteyi içeren), seçilen bileşen ≥ δK^d ise blok doludur.
    Blok kenarı, iki dolu bloğun seçilmiş bileşenleri arasında örneklenmiş bir bağ varsa oluşur.
    """
    K = _check_ell(K)
    if not (isinstance(delta, (int, float, np.integer, np.floating)) and 0 < delta <= 1):
        raise InvalidInputError(f"occupancy threshold delta must lie in (0, 1], got {delta!r}")
    box = graph.box
    if box.side % K != 0:
        raise InvalidInputError(f"box side {box.side} is not divisible by block side {K}")

    d = box.d
    m = box.side // K
    rel = graph.coords - np.asarray(box.lower, dtype=np.int64)
    block_of = np.zeros(box.site_count, dtype=np.int64)
    for axis in range(d):
        block_of = block_of * m + rel[:, axis] // K

    e = graph.edges
    intra = block_of[e[:, 0]] == block_of[e[:, 1]]
    n = box.site_count
    ei = e[intra]
    adj = sparse.csr_matrix(
        (np.ones(len(ei), dtype=np.int8), (ei[:, 0], ei[:, 1])), shape=(n, n)
    )
    _, raw = csgraph.connected_components(adj, directed=False)
    labels, sizes = _canonical(raw)

    _, first = np.unique(labels, return_index=True)
    comp_block = block_of[first]
    ids = np.arange(len(sizes), dtype=np.int64)
    order = np.lexsort((ids, -sizes, comp_block))
    _, pick = np.unique(comp_block[order], return_index=True)
    chosen = order[pick]
    chosen_size = sizes[chosen]
    occupied = chosen_size >= delta * K ** d

    inter = e[~intra]
    a, b = inter[:, 0], inter[:, 1]
    ba, bb = block_of[a], block_of[b]
    ok = (labels[a] == chosen[ba]) & (labels[b] == chosen[bb]) & occupied[ba] & occupied[bb]
    pairs = np.sort(np.column_stack([ba[ok], bb[ok]]), axis=1)
    if len(pairs):
        pairs = np.unique(pairs, axis=0)
    else:
        pairs = np.empty((0, 2), dtype=np.int64)

    s = None
    model = graph.model
    if model is not None and model.profile.kind.value != "custom-table":
        s = model.profile.s
    norm = NormKind.EUCLIDEAN if model is None else model.norm
    return BlockGraph(K, float(delta), box.side, d, norm, s, occupied, chosen, chosen_size, pairs.astype(np.int64))


@dataclass(frozen=True, eq=False)
class BlockConnectionTable:
    """Blok uzaklığına göre bağlantı sıklıkları ve 1 − exp(−β r^{−s}) uydurması."""
    frame: pd.DataFrame
    beta_fit: float
    s: object
    trials: int

    def to_rows(self):
        return self.frame.to_dict(orient='records')


def _connection_curve(r, beta, s):
    return 1.0 - np.exp(-beta * np.power(r, -s))


def block_connection_stats(blockgraphs, s=None):
    """
    Blok uzaklığı başına bağlantı sıklığı tablosu.

    Args:
        blockgraphs (Sequence[BlockGraph]): Aynı K ve kutu geometrisine sahip denemeler
        s (float, optional): Uydurma üssü (varsayılan modelin s değeri)

    Returns:
        BlockConnectionTable: Sıklıklar, standart hatalar, β_fit ve artıklar
    """
    blockgraphs = list(blockgraphs)
    if not blockgraphs:
        raise InvalidInputError("block_connection_stats needs at least one block graph")
    geometry = blockgraphs[0].geometry()
    if any(bg.geometry() != geometry for bg in blockgraphs):
        raise InvalidInputError("all block graphs must share K and box geometry")
    s = blockgraphs[0].s if s is None else s

    metric = PDIST_METRIC[blockgraphs[0].norm]
    coords = blockgraphs[0].block_coords()
    pair_counts, edge_counts = {}, {}
    for bg in blockgraphs:
        occ = np.flatnonzero(bg.occupied)
        if len(occ) >= 2:
            keys, counts = np.unique(np.round(pdist(coords[occ], metric=metric), 9), return_counts=True)
            for k, c in zip(keys.tolist(), counts.tolist()):
                pair_counts[k] = pair_counts.get(k, 0) + c
        if len(bg.edges):
            r = norm_array(coords[bg.edges[:, 0]] - coords[bg.edges[:, 1]], bg.norm)
            keys, counts = np.unique(np.round(r, 9), return_counts=True)
            for k, c in zip(keys.tolist(), counts.tolist()):
                edge_counts[k] = edge_counts.get(k, 0) + c

    distances = sorted(pair_counts)
    frame = pd.DataFrame({
        'distance': distances,
        'pairs': [pair_counts[r] for r in distances],
        'connected': [edge_counts.get(r, 0) for r in distances],
    }, columns=['distance', 'pairs', 'connected'])
    frame['frequency'] = frame['connected'] / frame['pairs']
    frame['stderr'] = np.sqrt(frame['frequency'] * (1 - frame['frequency']) / frame['pairs'])

    beta_fit = float('nan')
    if len(frame) and s is not None:
        if (frame['connected'] == 0).all():
            beta_fit = 0.0
        else:
            sigma = np.maximum(frame['stderr'].to_numpy(), 1.0 / frame['pairs'].to_numpy())
            try:
                popt, _ = optimize.curve_fit(
                    lambda r, beta: _connection_curve(r, beta, s),
                    frame['distance'].to_numpy(dtype=float),
                    frame['frequency'].to_numpy(dtype=float),
                    p0=[1.0], sigma=sigma, bounds=(0.0, np.inf),
                )
                beta_fit = float(popt[0])
            except (RuntimeError, ValueError) as e:
                logging.warning(f"⚠️ β uydurması başarısız: {e}")

    if math.isfinite(beta_fit):
        frame['fitted'] = _connection_curve(frame['distance'].to_numpy(dtype=float), beta_fit, s)
    else:
        frame['fitted'] = np.nan
    frame['residual'] = frame['frequency'] - frame['fitted']
    return BlockConnectionTable(frame, beta_fit, s, len(blockgraphs))
