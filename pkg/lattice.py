# -*- coding: utf-8 -*-
"""
Kafes Geometrisi
Z^d üzerindeki noktalar, normlar, Λ_L(x) kutuları ve B_L(x) halkaları.
Tüm tipler değiştirilemez; eşzamanlı kullanım serbesttir.
"""

from imports import *
from errors import InvalidInputError

# Koordinat sınırı: |c| ≤ 2^40
COORD_LIMIT = 2 ** 40


# ============================================================================
# NORM TÜRLERİ
# ============================================================================
class NormKind(str, Enum):
    EUCLIDEAN = "euclidean"
    SUP = "sup"
    TAXICAB = "taxicab"

    @classmethod
    def parse(cls, value):
        """Metin veya NormKind kabul eder."""
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidInputError(f"unknown norm: {value!r}") from None


# numpy.linalg.norm 'ord' karşılıkları
_NORM_ORD = {
    NormKind.EUCLIDEAN: 2,
    NormKind.SUP: np.inf,
    NormKind.TAXICAB: 1,
}

# scipy pdist metrik adları
PDIST_METRIC = {
    NormKind.EUCLIDEAN: "euclidean",
    NormKind.SUP: "chebyshev",
    NormKind.TAXICAB: "cityblock",
}


# ============================================================================
# NOKTALAR
# ============================================================================
def as_point(value, d=None):
    """
    Girdiyi tamsayı demetine (Point) dönüştürür ve doğrular.

    Args:
        value (int | Sequence[int]): Tek boyutta tamsayı, aksi halde koordinat dizisi
        d (int, optional): Beklenen boyut

    Returns:
        tuple: Koordinat demeti
    """
    if isinstance(value, (int, np.integer)):
        coords = (int(value),)
    else:
        try:
            coords = tuple(value)
        except TypeError:
            raise InvalidInputError(f"not a lattice point: {value!r}") from None
        checked = []
        for c in coords:
            if isinstance(c, (bool, np.bool_)) or not isinstance(c, (int, np.integer)):
                raise InvalidInputError(f"non-integer coordinate {c!r} in {value!r}")
            checked.append(int(c))
        coords = tuple(checked)

    if len(coords) == 0:
        raise InvalidInputError("point must have at least one coordinate")
    if d is not None and len(coords) != d:
        raise InvalidInputError(f"dimension mismatch: expected {d}, got {len(coords)}")
    for c in coords:
        if abs(c) > COORD_LIMIT:
            raise InvalidInputError(f"coordinate {c} exceeds |c| <= 2^40")
    return coords


def distance(p, q, norm=NormKind.EUCLIDEAN):
    """
    İki nokta arasındaki norm uzaklığı.

    Args:
        p, q: Aynı boyutta noktalar
        norm (NormKind | str): euclidean, sup veya taxicab

    Returns:
        float: |p − q|
    """
    p = as_point(p)
    q = as_point(q, len(p))
    norm = NormKind.parse(norm)
    diff = [abs(a - b) for a, b in zip(p, q)]
    if norm is NormKind.SUP:
        return float(max(diff))
    if norm is NormKind.TAXICAB:
        return float(sum(diff))
    return math.hypot(*diff)


def norm_array(displacements, norm=NormKind.EUCLIDEAN):
    """Yer değiştirme satırlarının (m, d) vektörel normları."""
    v = np.asarray(displacements, dtype=np.float64)
    if v.ndim == 1:
        v = v.reshape(-1, 1)
    return np.linalg.norm(v, ord=_NORM_ORD[NormKind.parse(norm)], axis=1)


# ============================================================================
# KUTULAR
# ============================================================================
class BoxMode(str, Enum):
    CENTERED = "centered"
    CORNERED = "cornered"


@dataclass(frozen=True)
class BoxSpec:
    """
    Kenar uzunluğu `side` olan kutu.
    cornered: anchor alt köşedir; centered: anchor merkezdir (tek kenar zorunlu).
    """
    anchor: tuple
    side: int
    mode: BoxMode = BoxMode.CORNERED

    def __post_init__(self):
        object.__setattr__(self, 'anchor', as_point(self.anchor))
        try:
            mode = BoxMode(self.mode)
        except ValueError:
            raise InvalidInputError(f"unknown box mode: {self.mode!r}") from None
        object.__setattr__(self, 'mode', mode)
        if isinstance(self.side, bool) or not isinstance(self.side, (int, np.integer)) or self.side < 1:
            raise InvalidInputError(f"box side must be a positive integer, got {self.side!r}")
        object.__setattr__(self, 'side', int(self.side))
        if mode is BoxMode.CENTERED and self.side % 2 == 0:
            raise InvalidInputError(f"centered box requires odd side, got {self.side}")
        for c in self.upper:
            if abs(c) > COORD_LIMIT:
                raise InvalidInputError("box exceeds coordinate bound 2^40")

    @classmethod
    def centered(cls, center, side):
        return cls(center, side, BoxMode.CENTERED)

    @classmethod
    def cornered(cls, corner, side):
        return cls(corner, side, BoxMode.CORNERED)

    # ------------------------------------------------------------------------
    # GEOMETRİ
    # ------------------------------------------------------------------------
    @property
    def d(self):
        return len(self.anchor)

    @property
    def lower(self):
        if self.mode is BoxMode.CENTERED:
            half = (self.side - 1) // 2
            return tuple(c - half for c in self.anchor)
        return self.anchor

    @property
    def upper(self):
        """Dahil üst köşe."""
        return tuple(c + self.side - 1 for c in self.lower)

    @property
    def site_count(self):
        return self.side ** self.d

    def contains(self, p):
        p = as_point(p)
        if len(p) != self.d:
            return False
        return all(lo <= c <= hi for c, lo, hi in zip(p, self.lower, self.upper))

    def contains_box(self, other):
        return other.d == self.d and all(
            lo <= olo and ohi <= hi
            for lo, hi, olo, ohi in zip(self.lower, self.upper, other.lower, other.upper)
        )

    # ------------------------------------------------------------------------
    # İNDEKSLEME (sözlük sırası, ilk koordinat en anlamlı)
    # ------------------------------------------------------------------------
    def index_of(self, p):
        p = as_point(p, self.d)
        if not self.contains(p):
            raise InvalidInputError(f"point {p} outside box {self.lower}..{self.upper}")
        index = 0
        for c, lo in zip(p, self.lower):
            index = index * self.side + (c - lo)
        return index

    def point_of(self, index):
        if not 0 <= index < self.site_count:
            raise InvalidInputError(f"site index {index} outside box")
        coords = []
        for lo in reversed(self.lower):
            index, r = divmod(int(index), self.side)
            coords.append(lo + r)
        return tuple(reversed(coords))

    def coords_array(self):
        """(side^d, d) int64 koordinat dizisi, sözlük sırasında."""
        grid = np.indices((self.side,) * self.d, dtype=np.int64).reshape(self.d, -1).T
        return grid + np.asarray(self.lower, dtype=np.int64)

    def indices_of(self, coords):
        """Koordinat satırlarını site indekslerine çevirir; kutu dışı satırlar -1 olur."""
        c = np.asarray(coords, dtype=np.int64).reshape(-1, self.d) - np.asarray(self.lower, dtype=np.int64)
        inside = np.all((c >= 0) & (c < self.side), axis=1)
        flat = np.zeros(len(c), dtype=np.int64)
        for axis in range(self.d):
            flat = flat * self.side + c[:, axis]
        return np.where(inside, flat, -1)

    def sites(self):
        return box_sites(self)


def box_sites(box):
    """Kutunun side^d sitesini sözlük sırasında üretir."""
    ranges = [range(lo, lo + box.side) for lo in box.lower]
    return itertools.product(*ranges)


def box_diameter(box, norm=NormKind.EUCLIDEAN):
    """
    Kutu çapı, kapalı formda.

    Args:
        box (BoxSpec): Kutu
        norm (NormKind | str): Norm

    Returns:
        float: En uzak iki köşe arasındaki uzaklık
    """
    norm = NormKind.parse(norm)
    span = box.side - 1
    if norm is NormKind.SUP:
        return float(span)
    if norm is NormKind.TAXICAB:
        return float(span * box.d)
    return span * math.sqrt(box.d)


# ============================================================================
# HALKALAR B_L(x) = Λ_{L+}(x) \ Λ_{L-}(x)
# ============================================================================
def minimal_odd_above(x):
    """x'ten kesin büyük en küçük tek tamsayı."""
    m = math.floor(x) + 1
    return m if m % 2 == 1 else m + 1


@dataclass(frozen=True)
class AnnulusSpec:
    outer: BoxSpec
    inner: BoxSpec

    @property
    def is_empty(self):
        return self.outer.side <= self.inner.side

    @property
    def site_count(self):
        if self.is_empty:
            return 0
        return self.outer.site_count - self.inner.site_count

    def contains(self, p):
        return self.outer.contains(p) and not self.inner.contains(p)

    def sites(self):
        if self.is_empty:
            return iter(())
        return (p for p in box_sites(self.outer) if not self.inner.contains(p))

    def sites_array(self):
        if self.is_empty:
            return np.empty((0, self.outer.d), dtype=np.int64)
        coords = self.outer.coords_array()
        lo = np.asarray(self.inner.lower)
        hi = np.asarray(self.inner.upper)
        in_inner = np.all((coords >= lo) & (coords <= hi), axis=1)
        return coords[~in_inner]


def annulus(center, L):
    """
    B_L(x) halkasını kurar.

    Args:
        center: Merkez noktası x
        L (float): Ölçek, L > 0

    Returns:
        AnnulusSpec: L+ ≤ L- ise boş halka (hata değil)
    """
    if not (isinstance(L, (int, float, np.integer, np.floating)) and math.isfinite(L) and L > 0):
        raise InvalidInputError(f"annulus scale must be a positive real, got {L!r}")
    center = as_point(center)
    outer = BoxSpec.centered(center, minimal_odd_above(L))
    inner = BoxSpec.centered(center, minimal_odd_above(L / 2))
    result = AnnulusSpec(outer, inner)
    if result.is_empty:
        logging.debug(f"Boş halka: L={L}, L+={outer.side}, L-={inner.side}")
    return result
