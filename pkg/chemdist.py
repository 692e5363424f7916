# -*- coding: utf-8 -*-
"""
Kimyasal Uzaklık ve Hiyerarşiler
BFS tabanlı uzaklıklar, en kısa yollar, graf çapı; en uzun bağ bölmesiyle
hiyerarşi çıkarma, doğrulama, açgözlü kurma, boşluk köprüleme ve denetim.

Hiyerarşi σ dizgeleri '0'/'1' karakterlerinden oluşur; kök boşluk '' ile gösterilir.
"""

from imports import *
from errors import InvalidInputError
from lattice import NormKind, as_point, distance, annulus, BoxSpec
from clusters import label_components, _local_cluster_indices, _check_ell, _check_rho

# Tam çap modu için site sınırı
EXACT_DIAMETER_LIMIT = 10 ** 4
_DIAMETER_CHUNK = 256


# ============================================================================
# YARDIMCILAR
# ============================================================================
def _endpoint_index(graph, p):
    p = as_point(p, graph.box.d)
    if not graph.box.contains(p):
        raise InvalidInputError(f"site {p} is outside the sample box")
    return graph.box.index_of(p)


def _norm_of(graph):
    return NormKind.EUCLIDEAN if graph.model is None else graph.model.norm


def _bfs_distances(graph, source):
    """Kaynaktan tüm sitelere atlama uzaklığı (ulaşılamayanlar inf)."""
    return csgraph.shortest_path(graph.adjacency, method='D', directed=False,
                                 unweighted=True, indices=source)


def binary_strings(k):
    """Uzunluğu k olan σ dizgeleri, sözlük sırasında."""
    return ["".join(bits) for bits in itertools.product("01", repeat=k)]


# ============================================================================
# UZAKLIK VE YOLLAR
# ============================================================================
def chemical_distance(graph, x, y):
    """
    D(x, y): en kısa yolun atlama sayısı.

    Returns:
        int | None: Ulaşılamıyorsa None
    """
    ix, iy = _endpoint_index(graph, x), _endpoint_index(graph, y)
    if ix == iy:
        return 0
    dist = _bfs_distances(graph, ix)[iy]
    return None if math.isinf(dist) else int(dist)


@dataclass(frozen=True)
class PathRecord:
    sites: tuple
    indices: tuple = ()

    @property
    def hops(self):
        return len(self.sites) - 1

    def bond_lengths(self, norm=NormKind.EUCLIDEAN):
        return [distance(a, b, norm) for a, b in zip(self.sites, self.sites[1:])]


def shortest_path(graph, x, y):
    """
    En kısa yol; y'den geriye doğru her adımda uzaklığı bir eksik olan
    en küçük indeksli komşu seçilir.

    Returns:
        PathRecord | None: Ulaşılamıyorsa None
    """
    ix, iy = _endpoint_index(graph, x), _endpoint_index(graph, y)
    if ix == iy:
        return PathRecord((graph.box.point_of(ix),), (ix,))
    dist = _bfs_distances(graph, ix)
    if math.isinf(dist[iy]):
        return None

    chain = [iy]
    current = iy
    for level in range(int(dist[iy]) - 1, -1, -1):
        nbrs = graph.neighbors(current)
        current = int(nbrs[np.flatnonzero(dist[nbrs] == level)[0]])
        chain.append(current)
    chain.reverse()
    return PathRecord(tuple(graph.box.point_of(i) for i in chain), tuple(chain))


# ============================================================================
# GRAF ÇAPI
# ============================================================================
@dataclass(frozen=True)
class DiameterResult:
    value: int
    is_lower_bound: bool
    mode: str
    component_size: int


def graph_diameter(graph, mode="exact", labeling=None):
    """
    En büyük bileşenin çapı.

    Args:
        graph (GraphSample): Örnek
        mode (str): 'exact' (≤ 10^4 site) veya 'two-sweep-lower'

    Returns:
        DiameterResult: Değer ve alt sınır bayrağı
    """
    if mode not in ("exact", "two-sweep-lower"):
        raise InvalidInputError(f"unknown diameter mode: {mode!r}")
    if mode == "exact" and graph.site_count > EXACT_DIAMETER_LIMIT:
        raise InvalidInputError(f"exact diameter is limited to {EXACT_DIAMETER_LIMIT} sites")

    labeling = label_components(graph) if labeling is None else labeling
    members = labeling.members(labeling.largest)
    if len(members) == 1:
        return DiameterResult(0, mode != "exact", mode, 1)

    if mode == "exact":
        sub = graph.adjacency[members][:, members]
        best = 0
        for start in range(0, len(members), _DIAMETER_CHUNK):
            rows = csgraph.shortest_path(sub, method='D', directed=False, unweighted=True,
                                         indices=np.arange(start, min(start + _DIAMETER_CHUNK, len(members))))
            best = max(best, int(rows[np.isfinite(rows)].max()))
        return DiameterResult(best, False, mode, len(members))

    first = _bfs_distances(graph, int(members[0]))
    reach = np.where(np.isfinite(first), first, -1)
    far = int(np.argmax(reach))
    second = _bfs_distances(graph, far)
    value = int(np.max(second[np.isfinite(second)]))
    return DiameterResult(value, True, mode, len(members))


# ============================================================================
# HİYERARŞİLER
# ============================================================================
@dataclass(frozen=True, eq=False)
class Hierarchy:
    """
    Derinlik n hiyerarşisi: 1..n uzunluğundaki her σ için z_σ.
    spans: boşluk σ -> yol üzerindeki (başlangıç, bitiş) konumları (yoldan çıkarıldıysa)
    gap_vectors: |σ| ≤ n−1 için t_σ = z_{σ0} − z_{σ1}
    """
    x: tuple
    y: tuple
    depth: int
    sites: dict
    requested_depth: int
    truncated: bool = False
    spans: dict = None
    norm: NormKind = NormKind.EUCLIDEAN
    gap_vectors: dict = field(default=None)

    def __post_init__(self):
        if self.gap_vectors is None:
            vectors = {}
            for k in range(self.depth):
                for sigma in binary_strings(k):
                    vectors[sigma] = _gap_vector(self.sites, sigma)
            object.__setattr__(self, 'gap_vectors', vectors)

    def site(self, sigma):
        return self.sites[sigma]

    def gap(self, sigma):
        return self.sites[sigma + "0"], self.sites[sigma + "1"]

    def gap_distance(self, sigma):
        u, v = self.gap(sigma)
        return distance(u, v, self.norm)

    def bonds(self):
        """(σ, z_{σ01}, z_{σ10}), |σ| ≤ n−2, sözlük sırasında."""
        result = []
        for k in range(self.depth - 1):
            for sigma in binary_strings(k):
                result.append((sigma, self.sites[sigma + "01"], self.sites[sigma + "10"]))
        return result

    def bottom_gaps(self):
        return binary_strings(self.depth - 1)

    def leaves(self):
        return [self.sites[sigma] for sigma in binary_strings(self.depth)]


def _gap_vector(sites, sigma):
    u, v = sites[sigma + "0"], sites[sigma + "1"]
    return tuple(a - b for a, b in zip(u, v))


def extract_hierarchy(path, depth, norm=NormKind.EUCLIDEAN):
    """
    Yoldan en uzun bağ bölmesiyle hiyerarşi çıkarır.

    Her seviyede her etkin parçada en uzun bağ (eşitlikte yol boyunca ilk olan)
    seçilir; uçları z_{σ01}, z_{σ10} olur. Boş parçalar çöker: z_{σ01} = z_{σ10} = z_{σ0}.
    Tüm alt boşluklar çöktüğünde derinlik artmaz; sonuç bayraklanır.

    Args:
        path (PathRecord): Uçları farklı yol
        depth (int): İstenen derinlik ≥ 1
        norm (NormKind): Bağ uzunluğu normu

    Returns:
        Hierarchy: Ulaşılan derinlikle hiyerarşi
    """
    if isinstance(depth, bool) or not isinstance(depth, (int, np.integer)) or depth < 1:
        raise InvalidInputError(f"hierarchy depth must be a positive integer, got {depth!r}")
    sites_seq = list(path.sites)
    if len(sites_seq) < 2 or sites_seq[0] == sites_seq[-1]:
        raise InvalidInputError("hierarchy extraction needs a path with distinct endpoints")
    norm = NormKind.parse(norm)
    lengths = path.bond_lengths(norm)

    sites = {"0": sites_seq[0], "1": sites_seq[-1]}
    spans = {"": (0, len(sites_seq) - 1)}
    achieved = 1
    level_gaps = [""]
    while achieved < depth:
        if all(spans[sigma][0] == spans[sigma][1] for sigma in level_gaps):
            break
        next_gaps = []
        for sigma in level_gaps:
            a, b = spans[sigma]
            if b > a:
                segment = lengths[a:b]
                t = a + int(np.argmax(segment))
                sites[sigma + "01"] = sites_seq[t]
                sites[sigma + "10"] = sites_seq[t + 1]
                spans[sigma + "0"] = (a, t)
                spans[sigma + "1"] = (t + 1, b)
            else:
                sites[sigma + "01"] = sites[sigma + "0"]
                sites[sigma + "10"] = sites[sigma + "0"]
                spans[sigma + "0"] = (a, a)
                spans[sigma + "1"] = (a, a)
            sites[sigma + "00"] = sites[sigma + "0"]
            sites[sigma + "11"] = sites[sigma + "1"]
            next_gaps.extend([sigma + "0", sigma + "1"])
        level_gaps = next_gaps
        achieved += 1

    truncated = achieved < depth
    if truncated:
        logging.debug(f"Hiyerarşi derinliği {depth} yerine {achieved} (tüm parçalar çöktü)")
    return Hierarchy(sites_seq[0], sites_seq[-1], achieved, sites, int(depth), truncated, spans, norm)


@dataclass(frozen=True)
class Violation:
    clause: int
    sigma: str
    detail: str


@dataclass(frozen=True)
class HierarchyValidation:
    valid: bool
    violations: tuple

    def __bool__(self):
        return self.valid

    def clauses(self):
        return sorted({v.clause for v in self.violations})


def validate_hierarchy(h, graph):
    """
    Tanımın dört koşulunu örneğe karşı denetler:
    1) z_0 = x, z_1 = y  2) z_{σ00} = z_{σ0}, z_{σ11} = z_{σ1}
    3) uçları farklı her (z_{σ01}, z_{σ10}) örnek kenarıdır  4) hiçbir kenar tekrar etmez
    """
    violations = []
    if h.sites.get("0") != h.x:
        violations.append(Violation(1, "0", f"z_0={h.sites.get('0')} differs from x={h.x}"))
    if h.sites.get("1") != h.y:
        violations.append(Violation(1, "1", f"z_1={h.sites.get('1')} differs from y={h.y}"))

    seen = {}
    for k in range(h.depth - 1):
        for sigma in binary_strings(k):
            for child, parent in ((sigma + "00", sigma + "0"), (sigma + "11", sigma + "1")):
                if h.sites.get(child) != h.sites.get(parent):
                    violations.append(Violation(2, child, f"z_{child} differs from z_{parent}"))
            u, v = h.sites.get(sigma + "01"), h.sites.get(sigma + "10")
            if u is None or v is None:
                violations.append(Violation(3, sigma, "bond endpoints missing"))
                continue
            if u == v:
                continue
            if not (graph.box.contains(u) and graph.box.contains(v)) or \
                    not graph.has_edge(graph.box.index_of(u), graph.box.index_of(v)):
                violations.append(Violation(3, sigma, f"({u}, {v}) is not a sampled edge"))
                continue
            key = (min(u, v), max(u, v))
            if key in seen:
                violations.append(Violation(4, sigma, f"edge {key} repeats bond at sigma={seen[key]!r}"))
            else:
                seen[key] = sigma

    return HierarchyValidation(not violations, tuple(violations))


def gap_product(h, k):
    """∏_{σ ∈ {0,1}^k} (|t_σ| ∨ 1)"""
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 1 <= k <= h.depth - 1:
        raise InvalidInputError(f"gap level must lie in 1..{h.depth - 1}, got {k!r}")
    return math.prod(max(h.gap_distance(sigma), 1.0) for sigma in binary_strings(k))


def gap_product_satisfied(h, k, N, gamma):
    """Çarpım ≥ N^{(2γ)^k}; logaritmik ölçekte karşılaştırılır."""
    if not N > 1:
        raise InvalidInputError(f"scale N must exceed 1, got {N!r}")
    if not 1 <= k <= h.depth - 1:
        raise InvalidInputError(f"gap level must lie in 1..{h.depth - 1}, got {k!r}")
    log_product = sum(math.log(max(h.gap_distance(sigma), 1.0)) for sigma in binary_strings(k))
    return log_product >= (2 * gamma) ** k * math.log(N) - 1e-12


def check_regularity(h, N, exponent):
    """
    Her bölünmüş boşluk için bağ uzunluğu ≥ boşluk uzaklığı × (log N)^{−üs}.

    Returns:
        dict: σ -> bool
    """
    if not (isinstance(N, (int, float, np.integer, np.floating)) and N > math.e):
        raise InvalidInputError(f"regularity needs N > e, got {N!r}")
    factor = math.log(N) ** (-float(exponent))
    flags = {}
    for sigma, u, v in h.bonds():
        gap = h.gap_distance(sigma)
        flags[sigma] = True if gap == 0 else distance(u, v, h.norm) >= gap * factor
    return flags


def check_pigeonhole(h):
    """
    Seçilen bağ uzunluğu ≥ parça uç uzaklığı / parça atlama sayısı.
    Yalnızca yoldan çıkarılan hiyerarşiler için anlamlıdır.
    """
    if h.spans is None:
        raise InvalidInputError("pigeonhole check needs a hierarchy extracted from a path")
    flags = {}
    for sigma, u, v in h.bonds():
        a, b = h.spans[sigma]
        if b == a:
            flags[sigma] = True
            continue
        bound = h.gap_distance(sigma) / (b - a)
        flags[sigma] = distance(u, v, h.norm) * (1 + 1e-12) >= bound
    return flags


def format_hierarchy(h):
    """Hata ayıklama için girintili ikili ağaç metni."""
    def fmt(p):
        return "(" + ",".join(str(c) for c in p) + ")"

    lines = [f"∅: {fmt(h.x)} -> {fmt(h.y)}  depth={h.depth}" + ("  [truncated]" if h.truncated else "")]
    for k in range(1, h.depth + 1):
        for sigma in binary_strings(k):
            line = "  " * k + f"{sigma}: {fmt(h.sites[sigma])}"
            if k <= h.depth - 1 and h.spans is not None and sigma in h.spans:
                a, b = h.spans[sigma]
                line += f"  span={b - a}"
            lines.append(line)
    return "\n".join(lines)


# ============================================================================
# AÇGÖZLÜ KURMA
# ============================================================================
@dataclass(frozen=True)
class GreedyResult:
    hierarchy: object
    failed_level: object = None
    failed_gap: object = None
    levels_completed: int = 0

    @property
    def success(self):
        return self.failed_level is None


def _dense_in_annulus(graph, center, scale, half, threshold, cache):
    ring = annulus(center, scale).sites_array()
    if len(ring) == 0:
        return []
    indices = graph.box.indices_of(ring)
    indices = np.sort(indices[indices >= 0])
    dense = []
    for index in indices.tolist():
        if index not in cache:
            cache[index] = len(_local_cluster_indices(graph, index, half)) >= threshold
        if cache[index]:
            dense.append(index)
    return dense


def greedy_build(graph, x, y, gamma, rho, ell):
    """
    Seviye seviye hiyerarşi kurar.

    Her boşluk (u, v) için N_k = |x−y|^{γ^k} ölçeğinde B_{N_{k+1}}(u) halkasındaki yoğun
    bir siteyi B_{N_{k+1}}(v) halkasındaki yoğun bir siteye bağlayan ilk örnek bağı arar
    (sözlük sırası). N_k ≤ ℓ olunca durur; bağ yoksa başarısız seviyeyi döndürür.

    Returns:
        GreedyResult: Hiyerarşi veya başarısız seviye/boşluk
    """
    if not (isinstance(gamma, (int, float)) and 0 < gamma < 1):
        raise InvalidInputError(f"gamma must lie in (0, 1), got {gamma!r}")
    rho = _check_rho(rho)
    ell = _check_ell(ell)
    ix, iy = _endpoint_index(graph, x), _endpoint_index(graph, y)
    if ix == iy:
        raise InvalidInputError("greedy construction needs distinct endpoints")

    norm = _norm_of(graph)
    point = graph.box.point_of
    x, y = point(ix), point(iy)
    N = distance(x, y, norm)
    half = (ell - 1) // 2
    threshold = rho * ell ** graph.box.d
    cache = {}
    used = set()

    sites = {"0": x, "1": y}
    level_gaps = [""]
    depth = 1
    level = 0
    while N ** (gamma ** level) > ell:
        scale = N ** (gamma ** (level + 1))
        updates = {}
        for sigma in level_gaps:
            u, v = sites[sigma + "0"], sites[sigma + "1"]
            first = _dense_in_annulus(graph, u, scale, half, threshold, cache)
            second = set(_dense_in_annulus(graph, v, scale, half, threshold, cache))
            bond = None
            for a in first:
                for b in graph.neighbors(a).tolist():
                    key = (min(a, b), max(a, b))
                    if b in second and key not in used:
                        bond = (a, b)
                        break
                if bond is not None:
                    break
            if bond is None:
                partial = Hierarchy(x, y, depth, dict(sites), depth, False, None, norm)
                logging.debug(f"Açgözlü kurma seviye {level + 1}, boşluk {sigma!r} için bağ bulamadı")
                return GreedyResult(partial, level + 1, sigma, level)
            used.add((min(bond), max(bond)))
            updates[sigma + "01"] = point(bond[0])
            updates[sigma + "10"] = point(bond[1])
            updates[sigma + "00"] = u
            updates[sigma + "11"] = v
        sites.update(updates)
        level_gaps = [sigma + c for sigma in level_gaps for c in "01"]
        depth += 1
        level += 1

    return GreedyResult(Hierarchy(x, y, depth, sites, depth, False, None, norm), None, None, level)


# ============================================================================
# BOŞLUK KÖPRÜLEME
# ============================================================================
@dataclass(frozen=True)
class BridgeResult:
    total_steps: int
    per_gap: dict
    walk: tuple
    walk_length: int
    loop_erased_length: int
    failed_gap: object = None

    @property
    def success(self):
        return self.failed_gap is None


def _bridge(graph, source, target, half):
    """İki uç penceresinin birleşimi içinde BFS; indeks yolu veya None."""
    if source == target:
        return [source]
    coords = graph.coords
    cu, cv = coords[source], coords[target]
    parent = {source: None}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        nbrs = graph.neighbors(current)
        if len(nbrs) == 0:
            continue
        c = coords[nbrs]
        inside = nbrs[np.all(np.abs(c - cu) <= half, axis=1) | np.all(np.abs(c - cv) <= half, axis=1)]
        for nb in inside.tolist():
            if nb in parent:
                continue
            parent[nb] = current
            if nb == target:
                chain = [nb]
                while parent[chain[-1]] is not None:
                    chain.append(parent[chain[-1]])
                return chain[::-1]
            queue.append(nb)
    return None


def _loop_erase(walk):
    path, position = [], {}
    for site in walk:
        if site in position:
            cut = position[site]
            for removed in path[cut + 1:]:
                del position[removed]
            path = path[:cut + 1]
        else:
            position[site] = len(path)
            path.append(site)
    return path


def bridge_gaps(graph, h, ell):
    """
    Alt seviye boşlukları uçların ℓ-pencerelerinin birleşiminde BFS ile köprüler.

    Yaprak siteler sözlük sırasında dolaşılır: (z_{τ0}, z_{τ1}) çiftleri boşluk,
    ardışık boşluklar arasındaki çiftler hiyerarşi bağıdır.

    Returns:
        BridgeResult: Toplam ek adım, x–y yürüyüşü ve ilmeksiz uzunluk
    """
    ell = _check_ell(ell)
    half = (ell - 1) // 2
    index = graph.box.index_of
    leaves = binary_strings(h.depth)
    walk = [index(h.sites[leaves[0]])]
    per_gap = {}
    for left, right in zip(leaves, leaves[1:]):
        u, v = index(h.sites[left]), index(h.sites[right])
        if left[-1] == "0" and left[:-1] == right[:-1]:
            sigma = left[:-1]
            segment = _bridge(graph, u, v, half)
            if segment is None:
                logging.debug(f"Boşluk {sigma!r} köprülenemedi")
                return BridgeResult(sum(per_gap.values()), per_gap, tuple(walk), len(walk) - 1, 0, sigma)
            per_gap[sigma] = len(segment) - 1
            walk.extend(segment[1:])
        elif u != v:
            walk.append(v)

    erased = _loop_erase(walk)
    return BridgeResult(sum(per_gap.values()), per_gap, tuple(walk), len(walk) - 1, len(erased) - 1)


# ============================================================================
# DENETİM
# ============================================================================
@dataclass(frozen=True, eq=False)
class HierarchyAudit:
    hierarchy: Hierarchy
    N: float
    gamma: float
    exponent: object
    gap_products: dict
    gap_product_ok: dict
    regularity: dict
    span_total: int
    bond_count: int
    path_length: int
    pigeonhole: dict

    @property
    def span_target(self):
        return 2 ** self.hierarchy.depth

    @property
    def span_half_target(self):
        return 2 ** (self.hierarchy.depth - 1)

    @property
    def partition_exact(self):
        return self.span_total + self.bond_count == self.path_length

    @property
    def gap_products_hold(self):
        return all(self.gap_product_ok.values())

    @property
    def regularity_holds(self):
        return all(self.regularity.values())

    @property
    def pigeonhole_holds(self):
        return all(self.pigeonhole.values())

    @property
    def passes(self):
        return self.gap_products_hold and self.regularity_holds and self.pigeonhole_holds

    def to_dict(self):
        return {
            'depth': self.hierarchy.depth,
            'requested_depth': self.hierarchy.requested_depth,
            'truncated': self.hierarchy.truncated,
            'N': self.N,
            'gamma': self.gamma,
            'exponent': self.exponent,
            'gap_products': {str(k): v for k, v in self.gap_products.items()},
            'gap_product_ok': {str(k): v for k, v in self.gap_product_ok.items()},
            'regularity_rate': (sum(self.regularity.values()) / len(self.regularity)) if self.regularity else 1.0,
            'span_total': self.span_total,
            'span_target': self.span_target,
            'span_half_target': self.span_half_target,
            'bond_count': self.bond_count,
            'path_length': self.path_length,
            'partition_exact': self.partition_exact,
            'pigeonhole_holds': self.pigeonhole_holds,
        }


def audit_hierarchy(graph, x, y, gamma, depth, exponent=None):
    """
    En kısa yoldan çıkarılan hiyerarşiyi denetler.

    Args:
        graph (GraphSample): Örnek
        x, y: Bağlı iki site
        gamma (float): Ölçek üssü
        depth (int): İstenen derinlik
        exponent (float, optional): Düzenlilik üssü (varsayılan Δ(s, d))

    Returns:
        HierarchyAudit: Boşluk çarpımları, düzenlilik, açıklık toplamı, güvercin yuvası
    """
    path = shortest_path(graph, x, y)
    if path is None:
        raise InvalidInputError(f"sites {x} and {y} are not connected")
    norm = _norm_of(graph)
    h = extract_hierarchy(path, depth, norm)
    N = distance(h.x, h.y, norm)

    if exponent is None and graph.model is not None:
        from theory import delta
        try:
            exponent = delta(graph.model.profile.s, graph.model.d)
        except InvalidInputError as e:
            logging.debug(f"Düzenlilik üssü hesaplanamadı: {e}")

    products, product_ok = {}, {}
    for k in range(1, h.depth):
        products[k] = gap_product(h, k)
        product_ok[k] = gap_product_satisfied(h, k, N, gamma) if N > 1 else True

    regularity = {}
    if exponent is not None and N > math.e:
        regularity = check_regularity(h, N, exponent)

    span_total = sum(b - a for a, b in (h.spans[sigma] for sigma in h.bottom_gaps()))
    bond_count = sum(1 for _, u, v in h.bonds() if u != v)
    return HierarchyAudit(h, N, float(gamma), exponent, products, product_ok, regularity,
                          span_total, bond_count, path.hops, check_pigeonhole(h))
