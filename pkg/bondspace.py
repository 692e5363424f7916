# -*- coding: utf-8 -*-
"""
Bağ Uzayı
Bağlantı olasılığı yasası ve sonlu kutularda yüksek hacimli bağ örneklemesi.

Örnekleyici her yer değiştirme sınıfı (aynı v vektörünün kutu içi ötelemeleri)
için geometrik atlama uzunlukları çeker; maliyet gerçekleşen kenar sayısıyla
orantılıdır, aday çift sayısıyla değil.

Tohumlar: beklenen kenar sayısı DENSE_CLASS_THRESHOLD üzerindeki ya da
p ≥ BERNOULLI_MASK_PROB olan her sınıf (seed, "class", v) alt akışından
çekilir. Seyrek sınıflar SPARSE_CHUNK büyüklüğünde sabit bloklara ayrılır
ve her blok ilk vektörünün anahtarıyla (seed, "chunk", v_0) tohumlanır; blok
sınırları yalnızca sınıf tablosuna bağlı olduğundan çıktı iş parçacığı
sayısından bağımsızdır.
"""

from imports import *
from errors import InvalidInputError, ResourceLimitError
from lattice import (
    NormKind, BoxSpec, BoxMode, as_point, norm_array, PDIST_METRIC,
)
from settings import DEFAULT_MEMORY_MB

# ============================================================================
# AYARLANABİLİR SABİTLER
# ============================================================================
# Beklenen kenar sayısı bu eşiği aşan sınıflar kendi alt akışlarıyla tek tek örneklenir
DENSE_CLASS_THRESHOLD = 32.0
# p bu değerin üzerindeyse doğrudan Bernoulli maskesi daha ucuz
BERNOULLI_MASK_PROB = 0.25
# Seyrek sınıflar bu büyüklükte bloklar halinde vektörel işlenir
SPARSE_CHUNK = 8192
# Kenar başına bellek tahmini (kenar dizisi + CSR + ara diziler)
BYTES_PER_EDGE = 96
NAIVE_SITE_LIMIT = 10 ** 4
EDGE_LIST_VERSION = 1
MAX_SEED = 2 ** 64


# ============================================================================
# BAĞLANTI PROFİLLERİ
# ============================================================================
class ProfileKind(str, Enum):
    SHIFTED_POWER = "shifted-power"   # q(z) = β(1+|z|)^(-s)
    PURE_POWER = "pure-power"         # q(z) = β|z|^(-s)
    CUSTOM_TABLE = "custom-table"     # |z| -> q açık tablosu


def _table_key(magnitude):
    return round(float(magnitude), 9)


@dataclass(frozen=True)
class ConnectionProfile:
    beta: float = 1.0
    s: float = 1.5
    kind: ProfileKind = ProfileKind.SHIFTED_POWER
    table: tuple = ()

    def __post_init__(self):
        try:
            kind = ProfileKind(self.kind)
        except ValueError:
            raise InvalidInputError(f"unknown profile kind: {self.kind!r}") from None
        object.__setattr__(self, 'kind', kind)
        beta = float(self.beta)
        s = float(self.s)
        if not math.isfinite(beta) or beta < 0:
            raise InvalidInputError(f"beta must be a nonnegative real, got {self.beta!r}")
        if kind is not ProfileKind.CUSTOM_TABLE and not (math.isfinite(s) and s > 0):
            raise InvalidInputError(f"power profiles require s > 0, got {self.s!r}")
        object.__setattr__(self, 'beta', beta)
        object.__setattr__(self, 's', s)

        if kind is ProfileKind.CUSTOM_TABLE:
            if not self.table:
                raise InvalidInputError("custom-table profile needs at least one (magnitude, q) entry")
            entries = []
            for magnitude, q in self.table:
                q = float(q)
                if not math.isfinite(q) or q < 0:
                    raise InvalidInputError(f"table q must be nonnegative, got {q!r} at |z|={magnitude}")
                entries.append((_table_key(magnitude), q))
            object.__setattr__(self, 'table', tuple(sorted(dict(entries).items())))

    @classmethod
    def from_table(cls, mapping):
        """Büyüklük -> q sözlüğünden özel tablo profili kurar."""
        return cls(beta=1.0, s=0.0, kind=ProfileKind.CUSTOM_TABLE, table=tuple(mapping.items()))

    def q_array(self, magnitudes):
        """
        Vektörel q(|z|).

        Args:
            magnitudes (np.ndarray): |z| ≥ 1 değerleri

        Returns:
            np.ndarray: q değerleri
        """
        r = np.asarray(magnitudes, dtype=np.float64)
        if self.kind is ProfileKind.SHIFTED_POWER:
            return self.beta * np.power(1.0 + r, -self.s)
        if self.kind is ProfileKind.PURE_POWER:
            return self.beta * np.power(r, -self.s)

        lookup = dict(self.table)
        keys, inverse = np.unique(np.round(r, 9), return_inverse=True)
        values = np.empty(len(keys), dtype=np.float64)
        for n, key in enumerate(keys):
            key = float(key)
            if key not in lookup:
                raise InvalidInputError(f"custom-table profile has no q for |z|={key}")
            values[n] = lookup[key]
        return values[inverse].reshape(r.shape)

    def describe(self):
        info = {'kind': self.kind.value, 'beta': self.beta, 's': self.s}
        if self.kind is ProfileKind.CUSTOM_TABLE:
            info['table'] = [[k, q] for k, q in self.table]
        return info


@dataclass(frozen=True)
class BondModel:
    """Boyut, profil, en yakın komşu katmanı ve norm; p_xy yasasını tanımlar."""
    d: int
    profile: ConnectionProfile
    nn_prob: float = 0.0
    norm: NormKind = NormKind.EUCLIDEAN

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, (int, np.integer)) or self.d < 1:
            raise InvalidInputError(f"dimension must be a positive integer, got {self.d!r}")
        object.__setattr__(self, 'd', int(self.d))
        nn = float(self.nn_prob)
        if not 0.0 <= nn <= 1.0:
            raise InvalidInputError(f"nn_prob must lie in [0, 1], got {self.nn_prob!r}")
        object.__setattr__(self, 'nn_prob', nn)
        object.__setattr__(self, 'norm', NormKind.parse(self.norm))
        if not isinstance(self.profile, ConnectionProfile):
            raise InvalidInputError("profile must be a ConnectionProfile")

    def with_beta(self, beta):
        return replace(self, profile=replace(self.profile, beta=beta))

    def describe(self):
        return {
            'd': self.d,
            'profile': self.profile.describe(),
            'nn_prob': self.nn_prob,
            'norm': self.norm.value,
        }

    @classmethod
    def from_description(cls, info):
        prof = info['profile']
        if prof['kind'] == ProfileKind.CUSTOM_TABLE.value:
            profile = ConnectionProfile.from_table({k: q for k, q in prof['table']})
        else:
            profile = ConnectionProfile(beta=prof['beta'], s=prof['s'], kind=prof['kind'])
        return cls(d=info['d'], profile=profile, nn_prob=info['nn_prob'], norm=info['norm'])


def make_model(d=1, s=1.5, beta=1.0, nn_prob=0.0, profile="shifted-power", norm="euclidean", table=None):
    """Komut satırı ve testler için kısa kurucu."""
    if ProfileKind(profile) is ProfileKind.CUSTOM_TABLE:
        if table is None:
            raise InvalidInputError("custom-table profile requires a q table")
        prof = ConnectionProfile.from_table(table)
    else:
        prof = ConnectionProfile(beta=beta, s=s, kind=profile)
    return BondModel(d=d, profile=prof, nn_prob=nn_prob, norm=norm)


# ============================================================================
# OLASILIKLAR
# ============================================================================
def _probabilities(model, displacements):
    """Sıfır olmayan yer değiştirme satırları için p = 1 − e^{−q}, NN katmanı dahil."""
    v = np.asarray(displacements, dtype=np.int64).reshape(-1, model.d)
    q = model.profile.q_array(norm_array(v, model.norm))
    p = -np.expm1(-q)
    if model.nn_prob > 0:
        nn = np.abs(v).sum(axis=1) == 1
        p = np.where(nn, 1.0 - (1.0 - p) * (1.0 - model.nn_prob), p)
    return p


def q_value(model, displacement):
    z = as_point(displacement, model.d)
    if all(c == 0 for c in z):
        raise InvalidInputError("q is undefined at zero displacement")
    return float(model.profile.q_array(norm_array([z], model.norm))[0])


def pair_probability(model, x, y):
    """
    Bir çiftin doğrudan bağlanma olasılığı p_xy.

    Args:
        model (BondModel): Model
        x, y: Farklı iki nokta

    Returns:
        float: Olasılık
    """
    x = as_point(x, model.d)
    y = as_point(y, model.d)
    if x == y:
        raise InvalidInputError("pair probability needs two distinct sites")
    z = tuple(a - b for a, b in zip(x, y))
    return float(_probabilities(model, [z])[0])


def box_connection_probability(model, B0, B1):
    """
    İki ayrık küme arasında en az bir bağ olma olasılığı (kesin).
    1 − exp(−ΣΣ q(z − z')), NN katmanı bağımsız ek bağ olarak eklenir.
    """
    A = np.asarray([as_point(p, model.d) for p in B0], dtype=np.int64).reshape(-1, model.d)
    B = np.asarray([as_point(p, model.d) for p in B1], dtype=np.int64).reshape(-1, model.d)
    if len(A) == 0 or len(B) == 0:
        raise InvalidInputError("both site sets must be nonempty")
    if set(map(tuple, A.tolist())) & set(map(tuple, B.tolist())):
        raise InvalidInputError("site sets must be disjoint")

    r = cdist(A, B, metric=PDIST_METRIC[model.norm])
    log_none = -math.fsum(model.profile.q_array(r).ravel())
    if model.nn_prob > 0:
        nn_pairs = int(np.count_nonzero(cdist(A, B, metric="cityblock") == 1))
        if nn_pairs:
            if model.nn_prob >= 1.0:
                return 1.0
            log_none += nn_pairs * math.log1p(-model.nn_prob)
    return float(-math.expm1(log_none))


# ============================================================================
# YER DEĞİŞTİRME SINIFLARI
# ============================================================================
def _lex_positive_vectors(side, d):
    """İlk sıfırdan farklı bileşeni pozitif olan v, |v_i| < side; sözlük sırasında."""
    if d == 1:
        return np.arange(1, side, dtype=np.int64).reshape(-1, 1)
    span = 2 * side - 1
    tail = _lex_positive_vectors(side, d - 1)
    tail = np.hstack([np.zeros((len(tail), 1), dtype=np.int64), tail])
    grid = np.indices((side - 1,) + (span,) * (d - 1), dtype=np.int64).reshape(d, -1).T
    grid[:, 0] += 1
    grid[:, 1:] -= side - 1
    return np.vstack([tail, grid])


@dataclass(frozen=True, eq=False)
class DisplacementTable:
    """Kutu için sınıf tablosu: vektörler, öteleme sayıları M_v ve olasılıklar p_v."""
    vectors: np.ndarray
    counts: np.ndarray
    probs: np.ndarray

    def __len__(self):
        return len(self.counts)


def class_count(box):
    return ((2 * box.side - 1) ** box.d - 1) // 2


def displacement_table(model, box):
    if box.d != model.d:
        raise InvalidInputError(f"box dimension {box.d} differs from model dimension {model.d}")
    vectors = _lex_positive_vectors(box.side, box.d)
    counts = np.prod(box.side - np.abs(vectors), axis=1).astype(np.int64)
    probs = _probabilities(model, vectors) if len(vectors) else np.empty(0)
    return DisplacementTable(vectors, counts, probs)


def expected_edge_count(model, box):
    """Kutu içi beklenen kenar sayısı Σ_v M_v p_v."""
    table = displacement_table(model, box)
    if len(table) == 0:
        return 0.0
    return math.fsum((table.counts * table.probs).tolist())


# ============================================================================
# TOHUMLAMA
# ============================================================================
def _check_seed(seed):
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or not 0 <= int(seed) < MAX_SEED:
        raise InvalidInputError(f"seed must be an integer in [0, 2^64), got {seed!r}")
    return int(seed)


def _stable_entropy(*keys):
    text = ":".join(str(k) for k in keys).encode("utf-8")
    return int.from_bytes(hashlib.blake2b(text, digest_size=16).digest(), "big")


def substream(seed, *keys):
    """(ana tohum, anahtarlar) için kararlı bağımsız üreteç."""
    return np.random.default_rng(np.random.SeedSequence(_stable_entropy(seed, *keys)))


def derive_seed(seed, *keys):
    """Deneme tohumları: (ana tohum, anahtarlar) karmasından 63 bit tamsayı."""
    return _stable_entropy("trial", seed, *keys) >> 65


# ============================================================================
# GRAF ÖRNEĞİ
# ============================================================================
@dataclass(frozen=True, eq=False)
class GraphSample:
    """
    Sonlu kutuda bir bağ konfigürasyonu.
    edges: (m, 2) int64, her satırda i < j, sözlük sırasında sıralı site indeksleri.
    """
    box: BoxSpec
    model: object
    seed: int
    edges: np.ndarray

    @classmethod
    def from_edges(cls, box, pairs, model=None, seed=0, points=False):
        """
        Elle verilen kenarlardan örnek kurar (testler ve kenar listesi okuma).

        Args:
            box (BoxSpec): Kutu
            pairs (Iterable): Site indeksi çiftleri veya points=True ise nokta çiftleri
        """
        rows = []
        for a, b in pairs:
            if points:
                a, b = box.index_of(a), box.index_of(b)
            a, b = int(a), int(b)
            if not (0 <= a < box.site_count and 0 <= b < box.site_count):
                raise InvalidInputError(f"edge ({a}, {b}) leaves the box")
            if a == b:
                raise InvalidInputError(f"self-loop at site {a}")
            rows.append((min(a, b), max(a, b)))
        if rows:
            edges = np.unique(np.asarray(rows, dtype=np.int64), axis=0)
        else:
            edges = np.empty((0, 2), dtype=np.int64)
        return cls(box, model, seed, edges)

    @property
    def edge_count(self):
        return int(len(self.edges))

    @property
    def site_count(self):
        return self.box.site_count

    @cached_property
    def adjacency(self):
        """Simetrik CSR komşuluk; her satırda komşular artan sırada."""
        n = self.site_count
        i, j = self.edges[:, 0], self.edges[:, 1]
        data = np.ones(2 * len(i), dtype=np.int8)
        adj = sparse.csr_matrix((data, (np.concatenate([i, j]), np.concatenate([j, i]))), shape=(n, n))
        adj.sort_indices()
        return adj

    @cached_property
    def coords(self):
        return self.box.coords_array()

    def neighbors(self, index):
        adj = self.adjacency
        return adj.indices[adj.indptr[index]:adj.indptr[index + 1]]

    def degree(self, index):
        adj = self.adjacency
        return int(adj.indptr[index + 1] - adj.indptr[index])

    def has_edge(self, a, b):
        a, b = min(a, b), max(a, b)
        row = self.neighbors(a)
        k = np.searchsorted(row, b)
        return bool(k < len(row) and row[k] == b)

    def edge_set(self):
        return {(int(a), int(b)) for a, b in self.edges}

    def index_of(self, p):
        return self.box.index_of(p)

    def point_of(self, index):
        return self.box.point_of(index)


# ============================================================================
# BELLEK BÜTÇESİ
# ============================================================================
def estimate_sampling_memory_mb(model, box, expected_edges=None):
    classes = class_count(box)
    class_bytes = classes * (box.d * 8 + 4 * 8)
    site_bytes = box.site_count * (box.d * 8 + 16)
    edge_bytes = 0 if expected_edges is None else expected_edges * BYTES_PER_EDGE
    return (class_bytes + site_bytes + edge_bytes) / 2 ** 20


def _check_budget(model, box, memory_mb, expected_edges=None):
    budget = DEFAULT_MEMORY_MB if memory_mb is None else float(memory_mb)
    required = estimate_sampling_memory_mb(model, box, expected_edges)
    if required > budget:
        logging.error(f"❌ Bellek bütçesi aşıldı: ~{required:.1f} MB gerekli, bütçe {budget:.1f} MB")
        raise ResourceLimitError(required, budget)
    return required


# ============================================================================
# ATLAMALI ÖRNEKLEYİCİ
# ============================================================================
def _geometric(rng, p, cap):
    """Ters dönüşümle geometrik atlama 1 + floor(log U / log(1 − p)), cap ile kırpılır."""
    u = 1.0 - rng.random(np.shape(p))
    with np.errstate(divide="ignore", invalid="ignore"):
        k = 1.0 + np.floor(np.log(u) / np.log1p(-np.asarray(p, dtype=np.float64)))
    k = np.where(np.isfinite(k), k, 1.0)
    return np.minimum(k, np.asarray(cap, dtype=np.float64)).astype(np.int64)


def _positions_dense(rng, count, p):
    """Tek sınıf için [0, count) içinde Bernoulli(p) başarı konumları."""
    if p >= BERNOULLI_MASK_PROB:
        return np.flatnonzero(rng.random(count) < p).astype(np.int64)
    parts = []
    last = -1
    expected = count * p
    batch = int(expected + 5.0 * math.sqrt(expected) + 16)
    while True:
        pos = last + np.cumsum(_geometric(rng, np.full(batch, p), count + 1))
        parts.append(pos)
        last = int(pos[-1])
        if last >= count:
            break
    pos = np.concatenate(parts)
    return pos[pos < count]


def _dense_job(seed, vector, count, p, p_marks):
    rng = substream(seed, "class", *vector.tolist())
    pos = _positions_dense(rng, int(count), float(p))
    marks = rng.random(len(pos)) * p if p_marks else None
    return pos, marks


def _sparse_job(seed, vectors, counts, probs, p_marks):
    """Bir blok seyrek sınıf: her turda aktif sınıf başına bir geometrik çekim."""
    rng = substream(seed, "chunk", *vectors[0].tolist())
    cls_parts, pos_parts = [], []
    active = np.arange(len(counts))
    pos = _geometric(rng, probs, counts + 1) - 1
    while len(active):
        alive = pos < counts[active]
        active, pos = active[alive], pos[alive]
        if not len(active):
            break
        cls_parts.append(active)
        pos_parts.append(pos)
        pos = pos + _geometric(rng, probs[active], counts[active] + 1)
    if cls_parts:
        cls_idx = np.concatenate(cls_parts)
        positions = np.concatenate(pos_parts)
    else:
        cls_idx = np.empty(0, dtype=np.int64)
        positions = np.empty(0, dtype=np.int64)
    marks = rng.random(len(positions)) * probs[cls_idx] if p_marks else None
    return cls_idx, positions, marks


def _pairs_from_positions(box, vectors, positions):
    """Doğrusal öteleme konumlarını (i, j) site çiftlerine çevirir; j > i."""
    side = box.side
    widths = side - np.abs(vectors)
    rem = positions.copy()
    start = np.empty_like(vectors)
    for axis in reversed(range(box.d)):
        start[:, axis] = rem % widths[:, axis]
        rem //= widths[:, axis]
    start += np.maximum(0, -vectors)
    end = start + vectors
    i = np.zeros(len(positions), dtype=np.int64)
    j = np.zeros(len(positions), dtype=np.int64)
    for axis in range(box.d):
        i = i * side + start[:, axis]
        j = j * side + end[:, axis]
    return i, j


def _skip_sample(table, box, seed, workers=1, with_marks=False):
    """
    Tüm sınıfları örnekler.

    Returns:
        tuple: (i, j, sınıf indeksi, işaretler veya None)
    """
    live = np.flatnonzero(table.probs > 0)
    expected = table.counts[live] * table.probs[live]
    dense = live[(expected > DENSE_CLASS_THRESHOLD) | (table.probs[live] >= BERNOULLI_MASK_PROB)]
    sparse_idx = np.setdiff1d(live, dense, assume_unique=True)

    jobs = []
    for c in dense:
        jobs.append(('dense', c, (seed, table.vectors[c], table.counts[c], table.probs[c], with_marks)))
    for start in range(0, len(sparse_idx), SPARSE_CHUNK):
        block = sparse_idx[start:start + SPARSE_CHUNK]
        jobs.append(('sparse', block, (seed, table.vectors[block], table.counts[block], table.probs[block], with_marks)))

    def run(job):
        kind, which, args = job
        if kind == 'dense':
            pos, marks = _dense_job(*args)
            return np.full(len(pos), which, dtype=np.int64), pos, marks
        local, pos, marks = _sparse_job(*args)
        return which[local], pos, marks

    if workers > 1 and CONCURRENT_AVAILABLE and len(jobs) > 1:
        results = [None] * len(jobs)
        with ThreadPoolExecutor(max_workers=workers) as executor:
            future_to_slot = {executor.submit(run, job): n for n, job in enumerate(jobs)}
            for future in as_completed(future_to_slot):
                results[future_to_slot[future]] = future.result()
    else:
        results = [run(job) for job in jobs]

    if results:
        cls_idx = np.concatenate([r[0] for r in results])
        positions = np.concatenate([r[1] for r in results])
        marks = np.concatenate([r[2] for r in results]) if with_marks else None
    else:
        cls_idx = np.empty(0, dtype=np.int64)
        positions = np.empty(0, dtype=np.int64)
        marks = np.empty(0) if with_marks else None

    i, j = _pairs_from_positions(box, table.vectors[cls_idx], positions)
    return i, j, cls_idx, marks


def _sorted_edges(i, j):
    order = np.lexsort((j, i))
    return np.column_stack([i[order], j[order]]).astype(np.int64).reshape(-1, 2)


def sample_graph(model, box, seed, workers=1, memory_mb=None):
    """
    Kutu içindeki her çifti bağımsız olarak p_xy ile kenar yapar.

    Args:
        model (BondModel): Model
        box (BoxSpec): Kutu
        seed (int): 64 bit ana tohum
        workers (int): Sınıf işlerini paralel çalıştıran iş parçacığı sayısı
        memory_mb (float, optional): Bellek bütçesi

    Returns:
        GraphSample: Değiştirilemez örnek
    """
    seed = _check_seed(seed)
    if box.d != model.d:
        raise InvalidInputError(f"box dimension {box.d} differs from model dimension {model.d}")
    _check_budget(model, box, memory_mb)
    table = displacement_table(model, box)
    expected = float(np.sum(table.counts * table.probs)) if len(table) else 0.0
    required = _check_budget(model, box, memory_mb, expected)
    logging.debug(f"🔄 Örnekleme: side={box.side}, d={box.d}, sınıf={len(table)}, beklenen kenar={expected:.1f}, ~{required:.1f} MB")

    i, j, _, _ = _skip_sample(table, box, seed, workers=workers)
    return GraphSample(box, model, seed, _sorted_edges(i, j))


def sample_coupled(models, box, seed, workers=1, memory_mb=None):
    """
    Ortak düzgün değişkenlerle eşlenmiş örnekleme.
    Her kenar için u ~ U(0, p_max) çekilir; model k'de kenar ancak u < p_k ise vardır.
    p_k ≤ p_k' her yerde sağlanıyorsa k örneği k' örneğinin alt kümesidir.
    """
    seed = _check_seed(seed)
    models = list(models)
    if not models:
        raise InvalidInputError("coupled sampling needs at least one model")
    for model in models:
        if model.d != box.d:
            raise InvalidInputError("all coupled models must match the box dimension")
    _check_budget(models[0], box, memory_mb)

    base = displacement_table(models[0], box)
    per_model = [base.probs] + [_probabilities(m, base.vectors) for m in models[1:]]
    p_max = np.max(np.vstack(per_model), axis=0) if len(base) else base.probs
    table = DisplacementTable(base.vectors, base.counts, p_max)
    expected = float(np.sum(table.counts * table.probs)) if len(table) else 0.0
    _check_budget(models[0], box, memory_mb, expected)

    i, j, cls_idx, marks = _skip_sample(table, box, seed, workers=workers, with_marks=True)
    samples = []
    for model, probs in zip(models, per_model):
        keep = marks < probs[cls_idx]
        samples.append(GraphSample(box, model, seed, _sorted_edges(i[keep], j[keep])))
    return samples


def sample_graph_naive(model, box, seed):
    """Çift başına açık yazı-tura; yalnızca doğrulama için (≤ 10^4 site)."""
    seed = _check_seed(seed)
    n = box.site_count
    if n > NAIVE_SITE_LIMIT:
        raise InvalidInputError(f"naive sampler is limited to {NAIVE_SITE_LIMIT} sites, box has {n}")
    if box.d != model.d:
        raise InvalidInputError(f"box dimension {box.d} differs from model dimension {model.d}")
    rng = np.random.default_rng(seed)
    coords = box.coords_array()
    rows, cols = [], []
    for i in range(n - 1):
        p = _probabilities(model, coords[i + 1:] - coords[i])
        hits = np.flatnonzero(rng.random(n - i - 1) < p)
        rows.append(np.full(len(hits), i, dtype=np.int64))
        cols.append(hits + i + 1)
    if rows:
        edges = np.column_stack([np.concatenate(rows), np.concatenate(cols)])
    else:
        edges = np.empty((0, 2), dtype=np.int64)
    return GraphSample(box, model, seed, edges.astype(np.int64).reshape(-1, 2))


# ============================================================================
# KENAR LİSTESİ DIŞA/İÇE AKTARMA
# ============================================================================
def _format_point(p):
    return ",".join(str(c) for c in p)


def edge_list_header(sample):
    return {
        'format': 'lrplab-edges',
        'version': EDGE_LIST_VERSION,
        'model': None if sample.model is None else sample.model.describe(),
        'box': {'anchor': list(sample.box.anchor), 'side': sample.box.side, 'mode': sample.box.mode.value},
        'seed': sample.seed,
        'edges': sample.edge_count,
    }


def write_edge_list(sample, target=None):
    """
    Örneği kenar listesi metnine yazar: '# {json başlık}' ardından 'x\\ty' satırları.

    Args:
        sample (GraphSample): Örnek
        target (str | Path | file, optional): Dosya yolu veya yazılabilir akış

    Returns:
        str: Üretilen metin
    """
    lines = ["# " + json.dumps(edge_list_header(sample), sort_keys=True)]
    coords = sample.coords
    for a, b in sample.edges:
        lines.append(f"{_format_point(coords[a])}\t{_format_point(coords[b])}")
    text = "\n".join(lines) + "\n"

    if target is None:
        return text
    if hasattr(target, 'write'):
        target.write(text)
    else:
        with open(target, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    logging.info(f"✅ Kenar listesi yazıldı: {sample.edge_count} kenar")
    return text


def read_edge_list(source):
    """write_edge_list çıktısından GraphSample kurar."""
    if hasattr(source, 'read'):
        text = source.read()
    elif isinstance(source, (str, Path)) and Path(source).exists():
        text = Path(source).read_text(encoding='utf-8')
    else:
        text = str(source)

    lines = text.splitlines()
    if not lines or not lines[0].startswith("# "):
        raise InvalidInputError("edge list is missing its header line")
    try:
        header = json.loads(lines[0][2:])
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"edge list header is not valid JSON: {e}") from None

    box_info = header['box']
    box = BoxSpec(tuple(box_info['anchor']), box_info['side'], BoxMode(box_info['mode']))
    model = None if header.get('model') is None else BondModel.from_description(header['model'])
    pairs = []
    for line in lines[1:]:
        if not line.strip():
            continue
        a, b = line.split("\t")
        pairs.append((tuple(int(c) for c in a.split(",")), tuple(int(c) for c in b.split(","))))
    return GraphSample.from_edges(box, pairs, model=model, seed=header['seed'], points=True)
