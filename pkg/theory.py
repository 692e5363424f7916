# -*- coding: utf-8 -*-
"""
Kuramsal Büyüklükler
Δ(s, d), Chernoff oranları, ölçek dizileri, tam graf site-bağ modeli,
kabuk toplamları ve üs eşitsizlikleri için kapalı formlar ve sınır hesapları.

Varoluşsal sabitler (C, g) çağıran tarafından verilir; modül yalnızca verilen
somut değerler için eşitsizlikleri doğrular ve ampirik üst sınırları raporlar.
"""

from imports import *
from errors import InvalidInputError, DivergenceError
from clusters import DisjointSet

# Eşitsizlik karşılaştırmalarında tolerans
IDENTITY_TOL = 1e-12
# Tam dağılım için en büyük köşe sayısı
EXACT_COMPLETE_GRAPH_LIMIT = 6
# Varyasyonel Chernoff formunda λ arama aralığı
_LAMBDA_MAX = 60.0


def _check_real(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, float, np.integer, np.floating)) \
            or not math.isfinite(value):
        raise InvalidInputError(f"{name} must be a finite real, got {value!r}")
    return float(value)


def _check_positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise InvalidInputError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def _check_probability(name, value):
    value = _check_real(name, value)
    if not 0.0 <= value <= 1.0:
        raise InvalidInputError(f"{name} must lie in [0, 1], got {value!r}")
    return value


# ============================================================================
# ÜS Δ(s, d)
# ============================================================================
def delta(s, d):
    """
    Δ(s, d) = log 2 / log(2d/s)

    Args:
        s (float): Bozunma üssü, d ≤ s < 2d
        d (int): Boyut

    Returns:
        float: s = d sınırında 1
    """
    s = _check_real("s", s)
    d = _check_positive_int("d", d)
    if s <= 0:
        raise InvalidInputError(f"s must be positive, got {s}")
    if s >= 2 * d:
        raise DivergenceError(f"Delta diverges for s >= 2d (s={s}, d={d})")
    if s < d:
        raise InvalidInputError(f"Delta is defined for s in [d, 2d), got s={s}, d={d}")
    if s == d:
        return 1.0
    return math.log(2) / math.log(2 * d / s)


def depth_K(N, gamma):
    """K = log log N / log(1/γ): hiyerarşinin ℓ ölçeğine indiği yaklaşık seviye."""
    N = _check_real("N", N)
    gamma = _check_real("gamma", gamma)
    if not N > math.e:
        raise InvalidInputError(f"N must exceed e, got {N}")
    if not 0 < gamma < 1:
        raise InvalidInputError(f"gamma must lie in (0, 1), got {gamma}")
    return math.log(math.log(N)) / math.log(1 / gamma)


def hierarchy_depth(N, gamma, eps=1.0):
    """
    n·log(1/γ) ≤ log log N − ε·log log log N koşulunu sağlayan en büyük n.

    Args:
        N (float): Uzaklık, N > e
        gamma (float): (0, 1) içinde
        eps (float): ε ≥ 0

    Returns:
        int: En az 1
    """
    N = _check_real("N", N)
    gamma = _check_real("gamma", gamma)
    eps = _check_real("eps", eps)
    if not N > math.e:
        raise InvalidInputError(f"N must exceed e, got {N}")
    if not 0 < gamma < 1:
        raise InvalidInputError(f"gamma must lie in (0, 1), got {gamma}")
    if eps < 0:
        raise InvalidInputError(f"eps must be nonnegative, got {eps}")

    loglog = math.log(math.log(N))
    rhs = loglog - eps * math.log(loglog) if eps else loglog
    step = math.log(1 / gamma)
    n = math.floor(rhs / step)
    while n * step > rhs:
        n -= 1
    while (n + 1) * step <= rhs:
        n += 1
    return max(1, n)


# ============================================================================
# CHERNOFF ORANLARI
# ============================================================================
def chernoff_rate(qprime, q):
    """
    ψ(q′, q) = (1−q′)log((1−q′)/(1−q)) − q′log(q/q′)

    0·log 0 = 0 kuralıyla; q = 1, q′ < 1 için +∞; q′ ≥ q için 0.
    """
    qprime = _check_probability("qprime", qprime)
    q = _check_probability("q", q)
    if qprime >= q:
        return 0.0
    if q == 1.0:
        return math.inf
    first = special.xlogy(1 - qprime, (1 - qprime) / (1 - q))
    second = special.xlogy(qprime, q / qprime) if qprime > 0 else 0.0
    return max(0.0, float(first - second))


def chernoff_rate_sup(qprime, q):
    """
    Varyasyonel form: sup_{λ≥0} [−log(1 − q + q·e^{−λ}) − λq′].
    Kapalı form için bağımsız kontrol olarak kullanılır.
    """
    qprime = _check_probability("qprime", qprime)
    q = _check_probability("q", q)
    if qprime >= q:
        return 0.0
    if q == 1.0:
        return math.inf

    def objective(lam):
        return -math.log1p(q * math.expm1(-lam)) - lam * qprime

    result = optimize.minimize_scalar(lambda lam: -objective(lam), bounds=(0.0, _LAMBDA_MAX),
                                      method='bounded', options={'xatol': 1e-12})
    return max(objective(float(result.x)), objective(0.0), objective(_LAMBDA_MAX))


def chernoff_floor_constant(alpha):
    """
    Taban eşitsizliğini her geçerli (q′, q) için sağlayan C(α) = 1/(1−α).
    q′log q′ ≥ q′ − 1 sınırından elde edilir.
    """
    alpha = _check_real("alpha", alpha)
    if not 0 <= alpha < 1:
        raise InvalidInputError(f"alpha must lie in [0, 1), got {alpha}")
    return 1.0 / (1.0 - alpha)


def chernoff_rate_floor(qprime, q, alpha, C):
    """
    (1−α)(1−q′)[log(1/(1−q)) − C]

    Args:
        qprime, q (float): 1−q′ ≥ (1−q)^α koşulunu sağlayan olasılıklar
        alpha (float): [0, 1) içinde
        C (float): Çağıranın verdiği sabit

    Returns:
        float: q′ = 1 için 0, q = 1 için +∞
    """
    qprime = _check_probability("qprime", qprime)
    q = _check_probability("q", q)
    alpha = _check_real("alpha", alpha)
    C = _check_real("C", C)
    if not 0 <= alpha < 1:
        raise InvalidInputError(f"alpha must lie in [0, 1), got {alpha}")
    if (1 - qprime) < (1 - q) ** alpha:
        raise InvalidInputError(f"floor needs 1-q' >= (1-q)^alpha (q'={qprime}, q={q}, alpha={alpha})")
    if qprime == 1.0:
        return 0.0
    if q == 1.0:
        return math.inf
    return (1 - alpha) * (1 - qprime) * (-math.log1p(-q) - C)


def empirical_floor_constant(alpha, points=50):
    """
    Izgara üzerinde tabanın ψ altında kalması için gereken en küçük C.
    Yalnızca q′ < q < 1 ve 1−q′ ≥ (1−q)^α noktaları sayılır.
    """
    alpha = _check_real("alpha", alpha)
    if not 0 <= alpha < 1:
        raise InvalidInputError(f"alpha must lie in [0, 1), got {alpha}")
    grid = np.linspace(0.0, 1.0, int(points) + 2)[1:-1]
    required = -math.inf
    for q in grid:
        for qprime in grid[grid < q]:
            if (1 - qprime) < (1 - q) ** alpha:
                continue
            psi = chernoff_rate(float(qprime), float(q))
            required = max(required, -math.log1p(-q) - psi / ((1 - alpha) * (1 - qprime)))
    return required


# ============================================================================
# ÖLÇEK DİZİLERİ
# ============================================================================
@dataclass(frozen=True, eq=False)
class ScaleSequence:
    ell0: int
    N0: int
    s: float
    sprime: float
    d: int
    rho0: float
    a: float
    ells: tuple
    Ns: tuple
    r: tuple
    p: tuple
    rho: tuple
    c0: float

    @property
    def depth(self):
        return len(self.ells) - 1

    @property
    def rho_limit(self):
        return self.rho[-1]

    def to_frame(self):
        """n = 1..depth satırları: ℓ_n, N_n, r_n, p_n, ρ_n"""
        n = self.depth
        return pd.DataFrame({
            'n': list(range(1, n + 1)),
            'ell': [str(v) for v in self.ells[:n]],
            'N': [str(v) for v in self.Ns[1:n + 1]],
            'r': list(self.r),
            'p': list(self.p),
            'rho': list(self.rho[1:]),
        })


def _unrounded_log_ell(k, a):
    return (1 + a) ** (k - 1)


def telescoping_terms(sprime, d, depth):
    """
    Yuvarlanmamış ℓ_k = exp((1+a)^{k−1}) dizisi için
    ℓ_{n+1}^{−s′} ∏_{k≤n} ℓ_k^{2d−s′} terimleri (n = 1..depth); her biri e^{−s′} olmalı.
    """
    sprime = _check_real("sprime", sprime)
    d = _check_positive_int("d", d)
    depth = _check_positive_int("depth", depth)
    if not 0 < sprime < 2 * d:
        raise InvalidInputError(f"sprime must lie in (0, 2d), got {sprime}")
    a = (2 * d - sprime) / sprime
    terms = []
    for n in range(1, depth + 1):
        log_term = -sprime * _unrounded_log_ell(n + 1, a) + (2 * d - sprime) * math.fsum(
            _unrounded_log_ell(k, a) for k in range(1, n + 1))
        terms.append(math.exp(log_term))
    return terms


def make_scale_sequence(ell0, N0, s, sprime, d, rho0, depth):
    """
    ℓ_n = round(ℓ_0 · exp((1+a)^{n−1} − 1)), a = (2d − s′)/s′, N_n = N_0 ∏ ℓ_k.

    Args:
        ell0, N0 (int): Taban ölçekler
        s, sprime (float): d < s < s′ < 2d
        d (int): Boyut
        rho0 (float): (0, 1) içinde
        depth (int): Hesaplanacak seviye sayısı

    Returns:
        ScaleSequence: ℓ, N, r, p, ρ dizileri ve c_0
    """
    ell0 = _check_positive_int("ell0", ell0)
    N0 = _check_positive_int("N0", N0)
    d = _check_positive_int("d", d)
    depth = _check_positive_int("depth", depth)
    s = _check_real("s", s)
    sprime = _check_real("sprime", sprime)
    rho0 = _check_real("rho0", rho0)
    if not d < s < sprime < 2 * d:
        raise InvalidInputError(f"scale sequence needs d < s < s' < 2d (s={s}, s'={sprime}, d={d})")
    if not 0 < rho0 < 1:
        raise InvalidInputError(f"rho0 must lie in (0, 1), got {rho0}")

    a = (2 * d - sprime) / sprime
    try:
        ells = tuple(int(round(ell0 * math.exp(_unrounded_log_ell(n, a) - 1))) for n in range(1, depth + 2))
    except OverflowError:
        raise InvalidInputError(f"scale sequence overflows at depth {depth}; use a smaller depth") from None

    Ns = [N0]
    for ell in ells[:depth]:
        Ns.append(Ns[-1] * ell)

    r, p, rho = [], [], [rho0]
    for n in range(1, depth + 1):
        r_n = 1 - 6 * math.exp((d - s) * math.log(ells[n - 1]))
        p_n = -math.expm1((s - sprime) * math.log(Ns[n]))
        if r_n <= 0 or p_n <= 0:
            raise InvalidInputError(f"r_{n}={r_n:.4g}, p_{n}={p_n:.4g} must be positive; increase ell0 or N0")
        r.append(r_n)
        p.append(p_n)
        rho.append(rho[-1] * r_n * p_n)

    log_terms = []
    for n in range(1, depth + 1):
        log_terms.append(-sprime * math.log(ells[n]) +
                         (2 * d - sprime) * math.fsum(math.log(e) for e in ells[:n]))
    c0 = math.exp(min(log_terms))

    logging.debug(f"Ölçek dizisi: a={a:.4f}, derinlik={depth}, c0={c0:.4g}, ρ∞≈{rho[-1]:.4g}")
    return ScaleSequence(ell0, N0, s, sprime, d, rho0, a, ells, tuple(Ns), tuple(r), tuple(p), tuple(rho), c0)


# ============================================================================
# TAM GRAF SİTE-BAĞ MODELİ
# ============================================================================
@dataclass(frozen=True)
class CompleteGraphParams:
    n: int
    r: float
    p: float
    rprime: float = None
    pprime: float = None

    def __post_init__(self):
        object.__setattr__(self, 'n', _check_positive_int("n", self.n))
        object.__setattr__(self, 'r', _check_probability("r", self.r))
        object.__setattr__(self, 'p', _check_probability("p", self.p))
        if self.rprime is not None:
            object.__setattr__(self, 'rprime', _check_probability("rprime", self.rprime))
        if self.pprime is not None:
            object.__setattr__(self, 'pprime', _check_probability("pprime", self.pprime))

    @property
    def rho(self):
        return self.pprime * self.rprime

    @property
    def threshold(self):
        """|C_n| ≤ p′r′n olayının eşiği."""
        return self.rho * self.n

    def to_dict(self):
        return {'n': self.n, 'r': self.r, 'p': self.p, 'rprime': self.rprime, 'pprime': self.pprime}


def _check_thresholds(params):
    if params.rprime is None or params.pprime is None:
        raise InvalidInputError("tail bound needs both thresholds rprime and pprime")
    if params.rprime > params.r or params.pprime > params.p:
        raise InvalidInputError(
            f"thresholds must satisfy r' <= r and p' <= p (r'={params.rprime}, r={params.r}, "
            f"p'={params.pprime}, p={params.p})")


def _exp_neg(exponent, rate):
    """exp(−exponent·rate), 0·∞ = 0 kuralıyla."""
    if exponent == 0 or rate == 0:
        return 1.0
    with np.errstate(over='ignore'):
        return float(np.exp(-exponent * rate))


def complete_graph_tail_bound(params):
    """
    e^{−nψ(r′,r)} + e^{−(n²r′² − n)ψ(p′,p)/2}

    1'den büyük değerler olduğu gibi döner (boş sınır).
    """
    _check_thresholds(params)
    n = params.n
    first = _exp_neg(n, chernoff_rate(params.rprime, params.r))
    second = _exp_neg(0.5 * (n * n * params.rprime ** 2 - n), chernoff_rate(params.pprime, params.p))
    bound = first + second
    if bound >= 1:
        logging.debug(f"Tam graf sınırı boş: {bound:.4g} ≥ 1")
    return bound


def complete_graph_trial(params, rng):
    """
    Tek yapılandırma: her köşe r, her kenar p olasılıkla dolu.

    Returns:
        tuple: (|C_n|, A_n dolu köşe sayısı, V_n dolu köşeler arasındaki boş çift sayısı)
    """
    n = params.n
    occupied = rng.random(n) < params.r
    iu, ju = np.triu_indices(n, 1)
    open_bond = rng.random(len(iu)) < params.p

    A = int(occupied.sum())
    if A == 0:
        return 0, 0, 0
    both = occupied[iu] & occupied[ju]
    keep = both & open_bond
    V = int(both.sum() - keep.sum())

    graph = sparse.coo_matrix((np.ones(int(keep.sum()), dtype=np.int8), (iu[keep], ju[keep])), shape=(n, n)).tocsr()
    _, labels = csgraph.connected_components(graph, directed=False)
    sizes = np.bincount(labels[occupied])
    return int(sizes.max()), A, V


def complete_graph_sample(params, seed):
    """En büyük dolu bileşenin boyutu (hiç dolu köşe yoksa 0)."""
    return complete_graph_trial(params, np.random.default_rng(seed))[0]


@lru_cache(maxsize=None)
def _edge_subset_counts(k):
    """K_k'nin kenar alt kümeleri: (kenar sayısı, en büyük bileşen) -> adet"""
    pairs = list(itertools.combinations(range(k), 2))
    counts = {}
    for mask in range(1 << len(pairs)):
        ds = DisjointSet(k)
        m = 0
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                ds.union(u, v)
                m += 1
        key = (m, ds.largest_size())
        counts[key] = counts.get(key, 0) + 1
    return counts


def complete_graph_exact(params):
    """
    |C_n| dağılımının tam sayımı (n ≤ 6).

    Returns:
        np.ndarray: c = 0..n için P(|C_n| = c)
    """
    n = params.n
    if n > EXACT_COMPLETE_GRAPH_LIMIT:
        raise InvalidInputError(f"exact enumeration is limited to n <= {EXACT_COMPLETE_GRAPH_LIMIT}")
    dist = np.zeros(n + 1)
    for k in range(n + 1):
        weight = stats.binom.pmf(k, n, params.r)
        if k == 0:
            dist[0] += weight
            continue
        total_edges = k * (k - 1) // 2
        for (m, largest), count in _edge_subset_counts(k).items():
            dist[largest] += weight * count * params.p ** m * (1 - params.p) ** (total_edges - m)
    return dist


# ============================================================================
# KABUK TOPLAMLARI
# ============================================================================
class ShellMode(str, Enum):
    AT_LEAST = "at-least"   # ∏ n_i ≥ b^κ
    BELOW = "below"         # ∏ n_i < b^κ


@dataclass(frozen=True)
class ShellSumSpec:
    kappa: int
    b: float
    alpha: float
    mode: ShellMode = ShellMode.BELOW

    def __post_init__(self):
        object.__setattr__(self, 'kappa', _check_positive_int("kappa", self.kappa))
        b = _check_real("b", self.b)
        if not b > 1:
            raise InvalidInputError(f"b must exceed 1, got {b}")
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'alpha', _check_real("alpha", self.alpha))
        try:
            object.__setattr__(self, 'mode', ShellMode(self.mode))
        except ValueError:
            raise InvalidInputError(f"unknown shell mode: {self.mode!r}") from None

    @property
    def target(self):
        return self.b ** self.kappa


def _below_sum(kappa, target, exponent, prod=1):
    """∏ n_i < target olan tüm κ-lı diziler üzerinden ∏ n_i^{exponent}."""
    if kappa == 0:
        return 1.0
    total = []
    n = 1
    while prod * n < target:
        total.append(n ** exponent * _below_sum(kappa - 1, target, exponent, prod * n))
        n += 1
    return math.fsum(total)


def shell_sum(spec):
    """
    below: Σ_{∏n_i < b^κ} ∏ n_i^{α−1} (tam sayım)
    at-least: Σ_{∏n_i ≥ b^κ} ∏ n_i^{−(1+α)} = ζ(1+α)^κ − (alt kısmın sayımı)
    """
    if spec.mode is ShellMode.BELOW:
        return _below_sum(spec.kappa, spec.target, spec.alpha - 1)
    if spec.alpha <= 0:
        raise DivergenceError(f"at-least shell sum diverges for alpha <= 0, got {spec.alpha}")
    full = float(special.zeta(1 + spec.alpha)) ** spec.kappa
    return full - _below_sum(spec.kappa, spec.target, -(1 + spec.alpha))


def shell_bound_rhs(spec, g):
    """
    at-least: (g b^{−α} log b)^κ,  below: (g b^{α} log b)^κ
    """
    g = _check_real("g", g)
    if g <= 0:
        raise InvalidInputError(f"g must be positive, got {g}")
    if spec.mode is ShellMode.BELOW and spec.b < math.e / 4:
        raise InvalidInputError(f"below-mode bound needs b >= e/4, got {spec.b}")
    sign = -1 if spec.mode is ShellMode.AT_LEAST else 1
    return (g * spec.b ** (sign * spec.alpha) * math.log(spec.b)) ** spec.kappa


def shell_ratio(spec):
    """(shell_sum)^{1/κ} / (b^{∓α} log b): g için ampirik alt sınır."""
    return shell_sum(spec) ** (1 / spec.kappa) / shell_bound_rhs(spec, 1.0) ** (1 / spec.kappa)


# ============================================================================
# ÜS EŞİTSİZLİKLERİ
# ============================================================================
def _check_exponent_args(s, d, gamma, n):
    s = _check_real("s", s)
    d = _check_positive_int("d", d)
    gamma = _check_real("gamma", gamma)
    n = _check_positive_int("n", n)
    if not d < s < 2 * d:
        raise InvalidInputError(f"s must lie in (d, 2d), got s={s}, d={d}")
    if not 0 < gamma < s / (2 * d):
        raise InvalidInputError(f"gamma must lie in (0, s/(2d)), got {gamma}")
    return s, d, gamma, n


def exponent_identity(s, d, gamma, n):
    """
    lhs = s − d(2γ)^n + (s−d) Σ_{k=1}^{n−1} (2γ)^k,  rhs = (s − 2dγ)(2γ)^{n−1}

    Returns:
        tuple: (lhs, rhs, lhs ≥ rhs)
    """
    s, d, gamma, n = _check_exponent_args(s, d, gamma, n)
    x = 2 * gamma
    lhs = s - d * x ** n + (s - d) * math.fsum(x ** k for k in range(1, n))
    rhs = (s - 2 * d * gamma) * x ** (n - 1)
    return lhs, rhs, lhs >= rhs - IDENTITY_TOL


def path_exponent_inequality(sprime, d, gamma, n):
    """
    s′ + (s′−d) Σ_{k=1}^{n−1} (2γ)^k ≥ s′(2γ)^{n−1}

    Returns:
        tuple: (lhs, rhs, lhs ≥ rhs)
    """
    sprime, d, gamma, n = _check_exponent_args(sprime, d, gamma, n)
    x = 2 * gamma
    lhs = sprime + (sprime - d) * math.fsum(x ** k for k in range(1, n))
    rhs = sprime * x ** (n - 1)
    return lhs, rhs, lhs >= rhs - IDENTITY_TOL


def hierarchy_path_bound(n, d, N_n):
    """Derinlik n hiyerarşisinden kurulan yolun uzunluk sınırı: 2^{n−1}(1 + 2^{d+1}N_n^d) + 2^{n−2}"""
    n = _check_positive_int("n", n)
    d = _check_positive_int("d", d)
    N_n = _check_real("N_n", N_n)
    return 2.0 ** (n - 1) * (1 + 2 ** (d + 1) * N_n ** d) + 2.0 ** (n - 2)


# ============================================================================
# REJİM REFERANSLARI
# ============================================================================
@dataclass(frozen=True)
class RegimeReference:
    regime: str
    law: str
    value: float


def regime_reference(s, d, N, theta=None):
    """
    Beş rejimde çap/uzaklık büyüme yasası (sabit çarpanlar olmadan).

    s < d: ⌈d/(d−s)⌉, s = d: log N / log log N, d < s < 2d: (log N)^Δ,
    s = 2d: N^θ (θ verilmeli), s > 2d: N
    """
    s = _check_real("s", s)
    d = _check_positive_int("d", d)
    N = _check_real("N", N)
    if s <= 0:
        raise InvalidInputError(f"s must be positive, got {s}")
    if not N > math.e:
        raise InvalidInputError(f"N must exceed e, got {N}")

    if s < d:
        return RegimeReference("s<d", "ceil(d/(d-s))", float(math.ceil(d / (d - s))))
    if s == d:
        return RegimeReference("s=d", "log N / log log N", math.log(N) / math.log(math.log(N)))
    if s < 2 * d:
        return RegimeReference("d<s<2d", "(log N)^Delta", math.log(N) ** delta(s, d))
    if s == 2 * d:
        if theta is None:
            raise InvalidInputError("the s = 2d regime needs an explicit theta in (0, 1)")
        theta = _check_real("theta", theta)
        if not 0 < theta < 1:
            raise InvalidInputError(f"theta must lie in (0, 1), got {theta}")
        return RegimeReference("s=2d", "N^theta", N ** theta)
    return RegimeReference("s>2d", "N", N)
