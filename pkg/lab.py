# -*- coding: utf-8 -*-
"""
Deney Laboratuvarı
Deney yapılandırması, tahminciler ve tekrarlanabilir raporlama.

Laboratory sınıfı koşuların omurgasıdır: ayarları yükler, denemeleri iş
parçacığı havuzuna dağıtır ve durum mesajlarını geri çağırımlarla yayınlar.
Her deneme kendi tohumunu (ana tohum, boyut, deneme) karmasından türetir;
bu yüzden sonuçlar iş parçacığı sayısından bağımsızdır.
"""

from imports import *
from errors import InvalidInputError, InvariantViolation, DivergenceError
from settings import load_settings, DEFAULT_SEED
from lattice import BoxSpec, distance as norm_distance
from bondspace import (
    BondModel, sample_graph, sample_coupled, derive_seed, estimate_sampling_memory_mb,
)
from clusters import label_components, dense_set, block_renormalize, block_connection_stats
from chemdist import chemical_distance, graph_diameter, audit_hierarchy, validate_hierarchy
from theory import (
    delta as delta_exponent, hierarchy_depth, chernoff_rate, make_scale_sequence,
    complete_graph_trial, complete_graph_tail_bound, complete_graph_exact,
    EXACT_COMPLETE_GRAPH_LIMIT, regime_reference,
)
from reports import Report

# Varsayılan dyadik uzaklık takvimi 2^8 .. 2^20
DEFAULT_DISTANCE_EXPONENTS = range(8, 21)
MIN_FIT_POINTS = 3
# Bir uzaklığın fite girmesi için gereken en az bağlı deneme
MIN_CONNECTED_TRIALS = 1
# Tam graf denemeleri iş parçacıklarına bu büyüklükte paketler halinde dağıtılır
COMPLETE_GRAPH_BATCH = 512


def binomial_stderr(p, n):
    """Binom standart hatası √(p(1−p)/n)."""
    if n <= 0:
        return float('nan')
    return math.sqrt(max(p * (1 - p), 0.0) / n)


# ============================================================================
# YAPILANDIRMA
# ============================================================================
@dataclass(frozen=True)
class ExperimentConfig:
    """
    Bir deney koşusunun tüm parametreleri.
    workers, out ve fmt rapora yansımaz; çıktılar bunlardan bağımsızdır.
    """
    model: BondModel
    sides: tuple = (64,)
    trials: int = 10
    seed: int = DEFAULT_SEED
    rho: float = 0.3
    delta: float = 0.5
    ell: int = 5
    gamma: float = 0.5
    sprime: float = None
    out: str = None
    fmt: str = "json"
    workers: int = 1
    box_factor: float = 4.0
    K: int = None
    distances: tuple = ()
    memory_mb: float = None
    betas: tuple = ()

    def __post_init__(self):
        if not isinstance(self.model, BondModel):
            raise InvalidInputError("config.model must be a BondModel")
        sides = tuple(sorted(set(int(s) for s in self.sides)))
        if not sides or sides[0] < 1:
            raise InvalidInputError(f"box sides must be positive integers, got {self.sides!r}")
        object.__setattr__(self, 'sides', sides)
        object.__setattr__(self, 'distances', tuple(sorted(set(int(x) for x in self.distances))))
        betas = tuple(sorted(set(float(b) for b in self.betas)))
        if betas and betas[0] <= 0:
            raise InvalidInputError(f"betas must be positive, got {self.betas!r}")
        object.__setattr__(self, 'betas', betas)
        if isinstance(self.trials, bool) or not isinstance(self.trials, (int, np.integer)) or self.trials < 1:
            raise InvalidInputError(f"trials must be a positive integer, got {self.trials!r}")
        if not 0 < self.gamma < 1:
            raise InvalidInputError(f"gamma must lie in (0, 1), got {self.gamma!r}")
        if not 0 < self.rho <= 1:
            raise InvalidInputError(f"rho must lie in (0, 1], got {self.rho!r}")
        if not 0 < self.delta <= 1:
            raise InvalidInputError(f"delta must lie in (0, 1], got {self.delta!r}")
        if isinstance(self.ell, bool) or self.ell < 1 or self.ell % 2 == 0:
            raise InvalidInputError(f"ell must be a positive odd integer, got {self.ell!r}")
        if self.workers < 1:
            raise InvalidInputError(f"workers must be at least 1, got {self.workers!r}")
        if not self.box_factor >= 1:
            raise InvalidInputError(f"box factor must be at least 1, got {self.box_factor!r}")
        if self.sprime is not None and not self.model.profile.s < self.sprime < 2 * self.model.d:
            raise InvalidInputError(f"sprime must lie in (s, 2d), got {self.sprime!r}")

    @property
    def effective_sprime(self):
        """Verilmemişse (s + 2d)/2; s ∉ (d, 2d) ise None."""
        if self.sprime is not None:
            return self.sprime
        s, d = self.model.profile.s, self.model.d
        if d < s < 2 * d:
            return (s + 2 * d) / 2
        return None

    def to_dict(self):
        return {
            'model': self.model.describe(),
            'sides': list(self.sides),
            'trials': int(self.trials),
            'seed': int(self.seed),
            'rho': self.rho,
            'delta': self.delta,
            'ell': int(self.ell),
            'gamma': self.gamma,
            'sprime': self.effective_sprime,
            'box_factor': self.box_factor,
            'K': self.K,
            'distances': list(self.distances),
            'betas': list(self.betas),
        }


def trial_seed(master, side, trial):
    return derive_seed(master, side, trial)


def pair_box(d, dist, box_factor=4.0):
    """
    Uzaklığı dist olan çift ve onu ortalayan kenarı ⌈box_factor·dist⌉ olan köşeli kutu.

    Returns:
        tuple: (BoxSpec, x, y); y = x + dist·e_1
    """
    if dist < 1:
        raise InvalidInputError(f"distance must be a positive integer, got {dist!r}")
    side = max(dist + 1, math.ceil(box_factor * dist))
    x0 = (side - 1 - dist) // 2
    mid = (side - 1) // 2
    x = (x0,) + (mid,) * (d - 1)
    y = (x0 + dist,) + (mid,) * (d - 1)
    return BoxSpec.cornered((0,) * d, side), x, y


def default_distances(model, box_factor=4.0, memory_mb=None):
    """Dyadik 2^8..2^20 takvimi; bellek bütçesini aşan ilk uzaklıkta kesilir."""
    budget = load_settings()['memory_mb'] if memory_mb is None else float(memory_mb)
    distances = []
    for k in DEFAULT_DISTANCE_EXPONENTS:
        box, _, _ = pair_box(model.d, 2 ** k, box_factor)
        required = estimate_sampling_memory_mb(model, box)
        if required > budget:
            logging.warning(f"⚠️ Uzaklık takvimi 2^{k} öncesinde kesildi: ~{required:.0f} MB > {budget:.0f} MB")
            break
        distances.append(2 ** k)
    return distances


# ============================================================================
# Δ TAHMİNİ
# ============================================================================
@dataclass(frozen=True, eq=False)
class DeltaEstimate:
    distances: tuple
    medians: tuple
    slope: float
    intercept: float
    residuals: tuple
    reference: object = None
    dropped: dict = field(default_factory=dict)
    report: object = None

    def to_dict(self):
        return {
            'distances': list(self.distances),
            'medians': list(self.medians),
            'slope': self.slope,
            'intercept': self.intercept,
            'residuals': list(self.residuals),
            'reference': self.reference,
            'dropped': {str(k): v for k, v in self.dropped.items()},
        }


def fit_delta(distances, medians):
    """
    log(medyan D) ~ log log |x| doğrusal uydurması.

    Returns:
        tuple: (eğim, kesişim, artıklar)
    """
    r = np.asarray(distances, dtype=np.float64)
    D = np.asarray(medians, dtype=np.float64)
    if len(r) != len(D):
        raise InvalidInputError("distances and medians must have equal length")
    if len(r) < MIN_FIT_POINTS:
        raise InvalidInputError(f"the fit needs at least {MIN_FIT_POINTS} distances, got {len(r)}")
    if np.any(r <= math.e) or np.any(D < 1):
        raise InvalidInputError("the fit needs distances above e and medians of at least 1")
    x = np.log(np.log(r))
    y = np.log(D)
    slope, intercept = np.polyfit(x, y, 1)
    if not math.isfinite(slope):
        raise InvalidInputError("fitted slope is not finite")
    residuals = y - (slope * x + intercept)
    return float(slope), float(intercept), tuple(float(v) for v in residuals)


# ============================================================================
# LABORATUVAR
# ============================================================================
class Laboratory:
    """
    Deney koşularının omurgası.
    Ayarlar, iş parçacığı havuzu ve durum olayları burada toplanır.
    """

    class Event:
        """Basit olay yönetim sınıfı (observer)."""
        def __init__(self):
            self.handlers = []

        def connect(self, handler):
            self.handlers.append(handler)

        def emit(self, *args, **kwargs):
            for handler in self.handlers:
                try:
                    handler(*args, **kwargs)
                except Exception as e:
                    logging.debug(f"Olay işleyicisi hatası: {e}")

    # ------------------------------------------------------------------------
    # BAŞLATMA
    # ------------------------------------------------------------------------
    def __init__(self, settings=None):
        self.settings = load_settings() if settings is None else dict(settings)
        self.on_status_updated = None
        self.trial_finished = self.Event()

    def _status(self, message):
        logging.info(message)
        if self.on_status_updated:
            try:
                self.on_status_updated(message)
            except Exception as e:
                logging.debug(f"Durum geri çağırımı hatası: {e}")

    def _memory(self, config):
        return self.settings['memory_mb'] if config.memory_mb is None else config.memory_mb

    def _map(self, fn, jobs, workers):
        """
        İşleri havuzda çalıştırır; sonuçlar iş sırasıyla döner.
        Sıralama tamamlanma sırasından bağımsızdır.
        """
        jobs = list(jobs)
        if workers > 1 and CONCURRENT_AVAILABLE and len(jobs) > 1:
            results = [None] * len(jobs)
            with ThreadPoolExecutor(max_workers=workers) as executor:
                future_to_slot = {executor.submit(fn, job): n for n, job in enumerate(jobs)}
                for future in as_completed(future_to_slot):
                    slot = future_to_slot[future]
                    results[slot] = future.result()
                    self.trial_finished.emit(slot, results[slot])
            return results
        results = []
        for n, job in enumerate(jobs):
            results.append(fn(job))
            self.trial_finished.emit(n, results[-1])
        return results

    def _new_report(self, kind, config_dict):
        return Report(kind=kind, config=config_dict)

    # ------------------------------------------------------------------------
    # EN BÜYÜK KÜME ORANI
    # ------------------------------------------------------------------------
    def run_cluster_fraction(self, config):
        """
        Her L için P(|C_L| < ρL^d) ampirik kuyruğu ve e^{−ρL^{2d−s′}} karşılaştırma eğrisi.
        """
        started = time.perf_counter()
        model, d = config.model, config.model.d
        report = self._new_report("cluster-fraction", config.to_dict())
        memory = self._memory(config)
        sprime = config.effective_sprime

        for L in config.sides:
            box = BoxSpec.cornered((0,) * d, L)
            threshold = config.rho * L ** d
            self._status(f"🔄 Küme oranı: L={L}, {config.trials} deneme")

            def one(t, L=L, box=box):
                seed = trial_seed(config.seed, L, t)
                labeling = label_components(sample_graph(model, box, seed, memory_mb=memory))
                return seed, labeling.largest_size

            results = self._map(one, range(config.trials), config.workers)
            below = 0
            fractions = []
            for t, (seed, largest) in enumerate(results):
                hit = largest < threshold
                below += hit
                fractions.append(largest / L ** d)
                report.add_row(t, seed, L, "largest_size", int(largest))
                report.add_row(t, seed, L, "below_threshold", int(hit))

            prob = below / config.trials
            reference = math.exp(-config.rho * L ** (2 * d - sprime)) if sprime is not None else None
            report.summary.append({
                'side': L, 'trials': config.trials, 'below': below,
                'probability': prob, 'stderr': binomial_stderr(prob, config.trials),
                'mean_fraction': float(np.mean(fractions)), 'reference_curve': reference,
            })
            logging.info(f"📊 L={L}: P(|C_L| < ρL^d) = {prob:.4f}")

        report.timings['total_seconds'] = time.perf_counter() - started
        return report

    # ------------------------------------------------------------------------
    # KİMYASAL UZAKLIK ÖLÇEKLEMESİ
    # ------------------------------------------------------------------------
    def _pair_trials(self, config, dist, measure):
        """Her deneme için çift kutusunu örnekler; uçlar en büyük bileşendeyse measure çağrılır."""
        model = config.model
        box, x, y = pair_box(model.d, dist, config.box_factor)
        memory = self._memory(config)

        def one(t):
            seed = trial_seed(config.seed, dist, t)
            graph = sample_graph(model, box, seed, memory_mb=memory)
            labeling = label_components(graph)
            ix, iy = box.index_of(x), box.index_of(y)
            connected = labeling.in_largest(ix) and labeling.in_largest(iy)
            return seed, connected, (measure(graph, x, y) if connected else None)

        return self._map(one, range(config.trials), config.workers)

    def run_distance_scaling(self, config, distances=None):
        """
        Uzaklık başına medyan D(x, y) ve log(medyan D) ~ log log |x| eğimi.
        Uçların ikisi de kutunun en büyük bileşeninde değilse deneme düşürülür.
        """
        started = time.perf_counter()
        model = config.model
        distances = list(distances or config.distances or default_distances(model, config.box_factor, self._memory(config)))
        report = self._new_report("distance-scaling", config.to_dict())
        report.config['distances'] = distances

        kept, medians, dropped = [], [], {}
        for dist in distances:
            self._status(f"🔄 Kimyasal uzaklık: |x|={dist}, {config.trials} deneme")
            results = self._pair_trials(config, dist, lambda g, x, y: chemical_distance(g, x, y))
            values = []
            for t, (seed, connected, D) in enumerate(results):
                report.add_row(t, seed, dist, "connected", int(connected))
                if connected:
                    report.add_row(t, seed, dist, "D", int(D))
                    values.append(D)
            drop_fraction = 1 - len(values) / config.trials
            dropped[dist] = drop_fraction
            median = float(np.median(values)) if values else None
            report.summary.append({
                'side': dist, 'trials': config.trials, 'connected': len(values),
                'dropped_fraction': drop_fraction, 'median_D': median,
                'mean_D': float(np.mean(values)) if values else None,
            })
            if len(values) < MIN_CONNECTED_TRIALS:
                logging.warning(f"⚠️ |x|={dist} için bağlı deneme yok, uzaklık fitten çıkarıldı")
                continue
            kept.append(dist)
            medians.append(median)

        reference = None
        try:
            reference = delta_exponent(model.profile.s, model.d)
        except InvalidInputError as e:
            logging.debug(f"Δ referansı yok: {e}")

        slope, intercept, residuals = fit_delta(kept, medians)
        report.bounds.append({'quantity': 'slope', 'empirical': slope, 'reference': reference,
                              'ratio': slope / reference if reference else None})
        report.tables['fit'] = [{'distance': r, 'median_D': m, 'residual': e}
                                for r, m, e in zip(kept, medians, residuals)]
        report.timings['total_seconds'] = time.perf_counter() - started
        logging.info(f"📊 Eğim = {slope:.4f} (Δ = {reference})")
        return DeltaEstimate(tuple(kept), tuple(medians), slope, intercept, residuals,
                             reference, dropped, report)

    # ------------------------------------------------------------------------
    # YOĞUN SİTE YOĞUNLUĞU
    # ------------------------------------------------------------------------
    def run_dense_density(self, config):
        """
        P(|D_L^{(ρ,ℓ)}| < ρL^d): kenarı L + ℓ − 1 olan kutunun iç L-bölgesinde yoğun siteler.
        """
        started = time.perf_counter()
        model, d, ell = config.model, config.model.d, config.ell
        report = self._new_report("dense-density", config.to_dict())
        memory = self._memory(config)
        sprime = config.effective_sprime
        half = (ell - 1) // 2

        for L in config.sides:
            if ell > L / ell:
                logging.warning(f"⚠️ ℓ={ell} > L/ℓ={L / ell:.2f}: yoğunluk aralık koşulu dışında")
            box = BoxSpec.cornered((0,) * d, L + ell - 1)
            region = BoxSpec.cornered((half,) * d, L)
            threshold = config.rho * L ** d
            self._status(f"🔄 Yoğun siteler: L={L}, ℓ={ell}")

            def one(t, L=L, box=box, region=region):
                seed = trial_seed(config.seed, L, t)
                graph = sample_graph(model, box, seed, memory_mb=memory)
                return seed, dense_set(graph, region, config.rho, ell).count

            results = self._map(one, range(config.trials), config.workers)
            below = 0
            fractions = []
            for t, (seed, count) in enumerate(results):
                hit = count < threshold
                below += hit
                fractions.append(count / L ** d)
                report.add_row(t, seed, L, "dense_count", int(count))
                report.add_row(t, seed, L, "below_threshold", int(hit))

            prob = below / config.trials
            report.summary.append({
                'side': L, 'trials': config.trials, 'below': below,
                'probability': prob, 'stderr': binomial_stderr(prob, config.trials),
                'mean_fraction': float(np.mean(fractions)),
                'reference_curve': math.exp(-config.rho * L ** (2 * d - sprime)) if sprime is not None else None,
            })

        report.timings['total_seconds'] = time.perf_counter() - started
        return report

    # ------------------------------------------------------------------------
    # TAM GRAF KONTROLÜ
    # ------------------------------------------------------------------------
    def run_complete_graph_check(self, params, trials, seed, workers=1):
        """
        P(|C_n| ≤ p′r′n) ampirik sıklığı ile kuyruk sınırının karşılaştırması.
        Geçme koşulu: ampirik ≤ sınır + 3 standart hata. n ≤ 6 için tam dağılımla
        toplam varyasyon uzaklığı da raporlanır.
        """
        started = time.perf_counter()
        if isinstance(trials, bool) or not isinstance(trials, (int, np.integer)) or trials < 1:
            raise InvalidInputError(f"trials must be a positive integer, got {trials!r}")
        bound = complete_graph_tail_bound(params)
        report = self._new_report("complete-graph", {'params': params.to_dict(), 'trials': int(trials),
                                                     'seed': int(seed)})
        self._status(f"🔄 Tam graf: n={params.n}, {trials} deneme")

        def batch(start):
            out = []
            for t in range(start, min(start + COMPLETE_GRAPH_BATCH, trials)):
                trial = trial_seed(seed, params.n, t)
                out.append((t, trial) + complete_graph_trial(params, np.random.default_rng(trial)))
            return out

        results = [r for chunk in self._map(batch, range(0, trials, COMPLETE_GRAPH_BATCH), workers) for r in chunk]
        sizes = np.zeros(trials, dtype=np.int64)
        occupied = np.zeros(trials, dtype=np.int64)
        vacant = np.zeros(trials, dtype=np.int64)
        for t, trial, largest, A, V in results:
            sizes[t], occupied[t], vacant[t] = largest, A, V
            report.add_row(t, trial, params.n, "largest", int(largest))
            report.add_row(t, trial, params.n, "occupied", int(A))
            report.add_row(t, trial, params.n, "vacant_pairs", int(V))

        tail = int(np.count_nonzero(sizes <= params.threshold))
        empirical = tail / trials
        stderr = binomial_stderr(empirical, trials)
        passes = empirical <= bound + 3 * stderr
        summary = {
            'side': params.n, 'trials': trials, 'tail_count': tail,
            'empirical': empirical, 'stderr': stderr,
            'mean_largest': float(sizes.mean()), 'mean_occupied': float(occupied.mean()),
            'mean_vacant_pairs': float(vacant.mean()),
        }
        if params.n <= EXACT_COMPLETE_GRAPH_LIMIT:
            exact = complete_graph_exact(params)
            observed = np.bincount(sizes, minlength=params.n + 1) / trials
            summary['total_variation'] = 0.5 * float(np.abs(observed - exact).sum())
            report.tables['exact_distribution'] = [
                {'size': c, 'exact': float(exact[c]), 'observed': float(observed[c])} for c in range(params.n + 1)
            ]
        report.summary.append(summary)
        report.bounds.append({
            'side': params.n, 'empirical': empirical, 'bound': bound, 'stderr': stderr,
            'vacuous': bound >= 1, 'passes': bool(passes),
        })
        if not passes:
            logging.warning(f"⚠️ Ampirik kuyruk {empirical:.4g} > sınır {bound:.4g} + 3·{stderr:.2g}")
        report.timings['total_seconds'] = time.perf_counter() - started
        return report

    # ------------------------------------------------------------------------
    # BLOK YENİDEN NORMALİZASYONU
    # ------------------------------------------------------------------------
    def run_block_renorm(self, config, K=None, delta=None, betas=None):
        """
        Blok doluluk oranı ve blok uzaklığına göre bağlantı tablosu (β uydurmasıyla).

        betas verilirse her deneme ortak düzgün değişkenlerle (sample_coupled)
        tüm β değerlerinde örneklenir ve doluluk β'ya göre raporlanır; eşlenmiş
        örneklerde doluluk β'da azalmayan olmalıdır.
        """
        started = time.perf_counter()
        K = config.K if K is None else K
        delta = config.delta if delta is None else delta
        betas = config.betas if betas is None else tuple(sorted(set(float(b) for b in betas)))
        if K is None:
            raise InvalidInputError("block renormalization needs a block side K")
        model, d = config.model, config.model.d
        for L in config.sides:
            if L % K != 0:
                raise InvalidInputError(f"box side {L} is not divisible by block side {K}")
        if betas and (betas[0] <= 0 or model.profile.kind.value == "custom-table"):
            raise InvalidInputError("a beta sweep needs positive betas and a power-law profile")
        report = self._new_report("block-renorm", {**config.to_dict(), 'K': K, 'delta': delta,
                                                   'betas': list(betas)})
        memory = self._memory(config)
        sweep = [model] + [model.with_beta(b) for b in betas]

        for L in config.sides:
            box = BoxSpec.cornered((0,) * d, L)
            self._status(f"🔄 Blok normalizasyonu: L={L}, K={K}")

            def one(t, L=L, box=box):
                seed = trial_seed(config.seed, L, t)
                if not betas:
                    return seed, block_renormalize(sample_graph(model, box, seed, memory_mb=memory), K, delta), ()
                samples = sample_coupled(sweep, box, seed, memory_mb=memory)
                bgs = [block_renormalize(g, K, delta) for g in samples]
                return seed, bgs[0], tuple(bg.occupancy_rate for bg in bgs[1:])

            results = self._map(one, range(config.trials), config.workers)
            blockgraphs = []
            swept = np.zeros(len(betas))
            for t, (seed, bg, rates) in enumerate(results):
                blockgraphs.append(bg)
                report.add_row(t, seed, L, "occupancy_rate", bg.occupancy_rate)
                report.add_row(t, seed, L, "block_edges", int(len(bg.edges)))
                for b, rate in zip(betas, rates):
                    report.add_row(t, seed, L, f"occupancy_rate_beta_{b:g}", rate)
                if any(lo > hi for lo, hi in zip(rates, rates[1:])):
                    raise InvariantViolation(f"coupled occupancy decreased in beta (L={L}, trial={t}): {rates}")
                swept += np.asarray(rates, dtype=np.float64)

            blocks = sum(bg.block_count for bg in blockgraphs)
            rate = sum(int(np.count_nonzero(bg.occupied)) for bg in blockgraphs) / blocks
            table = block_connection_stats(blockgraphs)
            report.summary.append({
                'side': L, 'trials': config.trials, 'blocks': blocks,
                'occupancy_rate': rate, 'stderr': binomial_stderr(rate, blocks),
                'beta_fit': table.beta_fit,
            })
            for b, total in zip(betas, swept):
                report.summary.append({'side': L, 'beta': b, 'occupancy_rate': total / config.trials})
            report.tables[f'connections_L{L}'] = table.to_rows()

        report.timings['total_seconds'] = time.perf_counter() - started
        return report

    # ------------------------------------------------------------------------
    # HİYERARŞİ DENETİMİ
    # ------------------------------------------------------------------------
    def run_hierarchy_audit(self, config, distances=None):
        """
        Bağlı her çift için en kısa yoldan n = hierarchy_depth(N, γ, 1) derinliğinde
        hiyerarşi çıkarılır; boşluk çarpımı ve düzenlilik oranları, açıklık toplamı
        raporlanır. Güvercin yuvası sınırı her hiyerarşide tutmalıdır.
        """
        started = time.perf_counter()
        model = config.model
        distances = list(distances or config.distances or default_distances(model, config.box_factor, self._memory(config)))
        report = self._new_report("hierarchy-audit", config.to_dict())
        report.config['distances'] = distances
        norm = model.norm

        def measure(graph, x, y):
            N = norm_distance(x, y, norm)
            depth = hierarchy_depth(N, config.gamma, 1.0) if N > math.e else 1
            audit = audit_hierarchy(graph, x, y, config.gamma, depth)
            if not audit.pigeonhole_holds:
                raise InvariantViolation(f"pigeonhole bound failed for pair {x}-{y}")
            return audit, bool(validate_hierarchy(audit.hierarchy, graph))

        for dist in distances:
            self._status(f"🔄 Hiyerarşi denetimi: |x|={dist}")
            results = self._pair_trials(config, dist, measure)
            audits = []
            for t, (seed, connected, outcome) in enumerate(results):
                report.add_row(t, seed, dist, "connected", int(connected))
                if not connected:
                    continue
                audit, valid = outcome
                audits.append((audit, valid))
                info = audit.to_dict()
                products = list(audit.gap_product_ok.values())
                report.add_row(t, seed, dist, "depth", info['depth'])
                report.add_row(t, seed, dist, "gap_product_rate", (sum(products) / len(products)) if products else 1.0)
                report.add_row(t, seed, dist, "regularity_rate", info['regularity_rate'])
                report.add_row(t, seed, dist, "span_total", info['span_total'])
                report.add_row(t, seed, dist, "span_over_half_target", int(info['span_total'] >= info['span_half_target']))
                report.add_row(t, seed, dist, "valid", int(valid))

            n = len(audits)
            report.summary.append({
                'side': dist, 'trials': config.trials, 'audited': n,
                'gap_products_rate': (sum(a.gap_products_hold for a, _ in audits) / n) if n else None,
                'regularity_rate': (sum(a.regularity_holds for a, _ in audits) / n) if n else None,
                'span_over_half_target_rate': (sum(a.span_total >= a.span_half_target for a, _ in audits) / n) if n else None,
                'valid_rate': (sum(v for _, v in audits) / n) if n else None,
                'pigeonhole_rate': 1.0 if n else None,
                'partition_exact_rate': (sum(a.partition_exact for a, _ in audits) / n) if n else None,
            })

        report.timings['total_seconds'] = time.perf_counter() - started
        return report

    # ------------------------------------------------------------------------
    # ÇAP ÖLÇEKLEMESİ
    # ------------------------------------------------------------------------
    def run_diameter_scaling(self, config, theta=None):
        """En büyük bileşenin çapı (iki taramalı alt sınır) ve rejim referans eğrisi."""
        started = time.perf_counter()
        model, d = config.model, config.model.d
        report = self._new_report("diameter-scaling", config.to_dict())
        memory = self._memory(config)

        for L in config.sides:
            box = BoxSpec.cornered((0,) * d, L)
            self._status(f"🔄 Çap: L={L}")

            def one(t, L=L, box=box):
                seed = trial_seed(config.seed, L, t)
                result = graph_diameter(sample_graph(model, box, seed, memory_mb=memory), "two-sweep-lower")
                return seed, result

            results = self._map(one, range(config.trials), config.workers)
            values = []
            for t, (seed, result) in enumerate(results):
                values.append(result.value)
                report.add_row(t, seed, L, "diameter_lower", int(result.value))
                report.add_row(t, seed, L, "component_size", int(result.component_size))

            reference = None
            if L > math.e:
                try:
                    reference = regime_reference(model.profile.s, d, L, theta)
                except InvalidInputError as e:
                    logging.debug(f"Rejim referansı yok: {e}")
            report.summary.append({
                'side': L, 'trials': config.trials, 'median_diameter': float(np.median(values)),
                'regime': None if reference is None else reference.regime,
                'reference_law': None if reference is None else reference.law,
                'reference_value': None if reference is None else reference.value,
            })

        report.timings['total_seconds'] = time.perf_counter() - started
        return report

    # ------------------------------------------------------------------------
    # KURAMSAL TABLOLAR
    # ------------------------------------------------------------------------
    def theory_report(self, s, d, sprime=None, rho0=0.5, ell0=100, N0=100, depth=4, points=9):
        """Δ değeri, ψ ızgarası ve (s′ verilirse) ölçek dizisi tablosu."""
        try:
            value = delta_exponent(s, d)
        except DivergenceError:
            value = math.inf
        report = self._new_report("theory", {'s': s, 'd': d, 'sprime': sprime, 'rho0': rho0,
                                             'ell0': ell0, 'N0': N0, 'depth': depth})
        report.summary.append({'s': s, 'd': d, 'delta': value})

        grid = [k / (points + 1) for k in range(1, points + 1)]
        report.tables['chernoff'] = [
            {'qprime': qp, 'q': q, 'psi': chernoff_rate(qp, q)} for q in grid for qp in grid if qp < q
        ]
        if sprime is not None:
            sequence = make_scale_sequence(ell0, N0, s, sprime, d, rho0, depth)
            report.tables['scale_sequence'] = sequence.to_frame().to_dict(orient='records')
            report.bounds.append({'quantity': 'c0', 'value': sequence.c0})
            report.bounds.append({'quantity': 'rho_limit', 'value': sequence.rho_limit})
        return report


# ============================================================================
# MODÜL DÜZEYİ KISAYOLLAR
# ============================================================================
def run_cluster_fraction(config):
    return Laboratory().run_cluster_fraction(config)


def run_distance_scaling(config, distances=None):
    return Laboratory().run_distance_scaling(config, distances)


def run_dense_density(config):
    return Laboratory().run_dense_density(config)


def run_complete_graph_check(params, trials, seed, workers=1):
    return Laboratory().run_complete_graph_check(params, trials, seed, workers)


def run_block_renorm(config, K=None, delta=None, betas=None):
    return Laboratory().run_block_renorm(config, K, delta, betas)


def run_hierarchy_audit(config, distances=None):
    return Laboratory().run_hierarchy_audit(config, distances)


def run_diameter_scaling(config, theta=None):
    return Laboratory().run_diameter_scaling(config, theta)
