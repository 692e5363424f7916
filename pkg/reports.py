# -*- coding: utf-8 -*-
"""
Deney Raporları
Report tipi ve JSON / CSV yazıcıları. Excel ve PDF çıktıları lazy loading ile
toexcel / topdf modüllerine devredilir.

Aynı yapılandırma ve tohumla üretilen rapor bayt bayt aynı yazılır; duvar saati
süreleri yalnızca açıkça istendiğinde serileştirilir.
"""

from imports import *
from errors import InvalidInputError

SCHEMA_VERSION = 1
CSV_COLUMNS = ("trial", "seed", "side", "quantity", "value")
REPORT_FORMATS = ("json", "csv", "xlsx", "pdf")


# ============================================================================
# SERİLEŞTİRME YARDIMCILARI
# ============================================================================
def _plain(value):
    """numpy tiplerini ve sonlu olmayan sayıları JSON uyumlu değerlere çevirir."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    return value


# ============================================================================
# RAPOR
# ============================================================================
@dataclass(eq=False)
class Report:
    """
    Bir deney koşusunun çıktısı.

    rows: her deneme için (trial, seed, side, quantity, value) satırları;
          'side' sütunu deneyin boyut parametresini taşır (kutu kenarı, uzaklık veya n)
    summary: boyut başına özet istatistikler
    bounds: ampirik değer ile formül karşılaştırmaları
    tables: ek adlandırılmış tablolar (ör. blok bağlantı sıklıkları)
    timings: duvar saati süreleri (saniye)
    """
    kind: str
    config: dict
    rows: list = field(default_factory=list)
    summary: list = field(default_factory=list)
    bounds: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def add_row(self, trial, seed, side, quantity, value):
        self.rows.append({'trial': int(trial), 'seed': int(seed), 'side': side,
                          'quantity': str(quantity), 'value': value})

    def sorted_rows(self):
        """Satırlar deneme, boyut ve büyüklük adına göre sıralanır."""
        return sorted(self.rows, key=lambda r: (r['side'], r['trial'], r['quantity']))

    def rows_frame(self):
        return pd.DataFrame(self.sorted_rows(), columns=list(CSV_COLUMNS))

    def summary_frame(self):
        return pd.DataFrame(self.summary)

    def bounds_frame(self):
        return pd.DataFrame(self.bounds)

    def values(self, quantity, side=None):
        """Bir büyüklüğün deneme sırasına göre değerleri."""
        return [r['value'] for r in self.sorted_rows()
                if r['quantity'] == quantity and (side is None or r['side'] == side)]

    def to_dict(self, include_timings=False):
        data = {
            'schema_version': SCHEMA_VERSION,
            'kind': self.kind,
            'config': self.config,
            'rows': self.sorted_rows(),
            'summary': self.summary,
            'bounds': self.bounds,
            'tables': self.tables,
        }
        if include_timings:
            data['timings'] = self.timings
        return _plain(data)

    def to_json(self, include_timings=False):
        return json.dumps(self.to_dict(include_timings), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ============================================================================
# YAZICILAR
# ============================================================================
def write_json(report, path, include_timings=False):
    path = Path(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(report.to_json(include_timings))
    logging.info(f"✅ JSON rapor yazıldı: {path}")
    return path


def summary_path(path):
    path = Path(path)
    return path.with_name(path.stem + ".summary.csv")


def _frame_csv(frame):
    frame = frame.map(cell_value) if len(frame) else frame
    return frame.to_csv(index=False, lineterminator="\n")


def cell_value(value):
    value = _plain(value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return value


def write_csv(report, path, include_timings=False):
    """
    Deneme satırları <path>, özet ve sınırlar <stem>.summary.csv dosyasına yazılır.
    Her iki dosya '# schema_version=1' satırıyla başlar.
    """
    path = Path(path)
    header = f"# schema_version={SCHEMA_VERSION}\n"
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(header + _frame_csv(report.rows_frame()))

    parts = []
    for name, records in [('summary', report.summary), ('bounds', report.bounds)] + sorted(report.tables.items()):
        if records:
            frame = pd.DataFrame(records)
            frame.insert(0, 'table', name)
            parts.append(frame)
    if include_timings and report.timings:
        parts.append(pd.DataFrame([{'table': 'timings', **report.timings}]))
    combined = pd.concat(parts, ignore_index=True) if parts else pd.DataFrame(columns=['table'])

    target = summary_path(path)
    with open(target, 'w', encoding='utf-8', newline='\n') as f:
        f.write(header + _frame_csv(combined))
    logging.info(f"✅ CSV rapor yazıldı: {path} (+ {target.name})")
    return path


def write_report(report, path, fmt="json", lang="tr", include_timings=False):
    """
    Raporu istenen biçimde yazar.

    Args:
        report (Report): Rapor
        path (str | Path): Hedef dosya
        fmt (str): json, csv, xlsx veya pdf
        lang (str): Excel/PDF etiket dili
        include_timings (bool): Süreleri de yaz

    Returns:
        bool: Başarılı ise True
    """
    if fmt not in REPORT_FORMATS:
        raise InvalidInputError(f"unknown report format: {fmt!r}")
    if fmt == "json":
        write_json(report, path, include_timings)
        return True
    if fmt == "csv":
        write_csv(report, path, include_timings)
        return True

    module = get_excel_module() if fmt == "xlsx" else get_pdf_module()
    if module is None:
        logging.error(f"❌ {fmt} dışa aktarma modülü kullanılamıyor")
        return False
    if fmt == "xlsx":
        return module.export_report_to_excel(report, path, lang, include_timings)
    return module.export_report_to_pdf(report, path, lang, include_timings)
