# -*- coding: utf-8 -*-
"""
Excel Dışa Aktarma Modülü
Deney raporlarını Excel formatına dönüştürür.
Pandas ve XlsxWriter kullanarak formatlı çalışma kitapları oluşturur.
"""

# Merkezi import dosyasından gerekli modülleri al
from imports import *
from locales import tr
from reports import cell_value

# Yeniden üretilen kitapların aynı olması için sabit oluşturma tarihi
WORKBOOK_CREATED = datetime(2000, 1, 1)


# ============================================================================
# RAPOR EXCEL DIŞA AKTARICI
# ============================================================================
class ReportExcelExporter:
    """
    Deney raporunu sayfalara ayırarak Excel'e aktarır:
    denemeler, özet, sınırlar, yapılandırma ve ek tablolar.
    """

    def __init__(self, lang="tr"):
        self.lang = lang

    # ------------------------------------------------------------------------
    # SÜTUN GENİŞLİĞİ AYARLAMA
    # ------------------------------------------------------------------------
    def _auto_adjust_column_widths(self, writer, sheet_name, df):
        """
        Sütun genişliklerini içeriğe göre ayarlar, başlık ve hücre stillerini uygular.
        """
        try:
            worksheet = writer.sheets[sheet_name]
            workbook = writer.book

            # Başlık stili: Koyu, beyaz yazı, mor arka plan
            header_format = workbook.add_format({
                'bold': True,
                'text_wrap': True,
                'valign': 'top',
                'fg_color': '#6C5DD3',
                'font_color': 'white',
                'border': 1
            })

            # Olasılık ve oran sütunları için 6 ondalık basamak
            number_format = workbook.add_format({
                'num_format': '0.000000',
                'valign': 'top',
                'border': 1
            })

            for i, col in enumerate(df.columns):
                header_len = len(str(col))
                if len(df) > 0:
                    max_len = df[col].astype(str).map(len).max()
                    col_width = min(max(max_len, header_len) + 2, 50)
                else:
                    col_width = header_len + 2
                col_width = max(col_width, 10)

                if df[col].dtype.kind == 'f':
                    worksheet.set_column(i, i, col_width, number_format)
                else:
                    worksheet.set_column(i, i, col_width)
                worksheet.write(0, i, col, header_format)

        except Exception as e:
            logging.error(f"Sütun genişlik ayarlama hatası: {e}")

    def _frame(self, records, columns=None):
        df = pd.DataFrame(records, columns=columns)
        return df.map(cell_value) if len(df) else df

    def _sheets(self, report, include_timings):
        """Sayfa adı -> DataFrame"""
        lang = self.lang
        sheets = {
            tr("sheet_rows", lang): self._frame(report.sorted_rows(), ['trial', 'seed', 'side', 'quantity', 'value']),
            tr("sheet_summary", lang): self._frame(report.summary),
            tr("sheet_bounds", lang): self._frame(report.bounds),
        }
        config = [{tr("col_key", lang): k, tr("col_value", lang): cell_value(v)}
                  for k, v in sorted(report.config.items())]
        config.insert(0, {tr("col_key", lang): tr("report_kind", lang), tr("col_value", lang): report.kind})
        sheets[tr("sheet_config", lang)] = pd.DataFrame(config)
        for name, records in sorted(report.tables.items()):
            sheets[name[:31]] = self._frame(records)
        if include_timings and report.timings:
            sheets[tr("section_timings", lang)] = self._frame([report.timings])
        return sheets

    # ------------------------------------------------------------------------
    # EXCEL DIŞA AKTARMA
    # ------------------------------------------------------------------------
    def export(self, report, file_path, include_timings=False):
        """
        Raporu bir Excel dosyasına aktarır.

        Args:
            report (Report): Deney raporu
            file_path (str): Excel dosya yolu
            include_timings (bool): Süre sayfası eklensin mi

        Returns:
            bool: Başarılı ise True, aksi halde False
        """
        if not XLSXWRITER_AVAILABLE:
            logging.error("❌ xlsxwriter yüklü değil, Excel dosyası oluşturulamadı")
            return False
        try:
            with pd.ExcelWriter(file_path, engine='xlsxwriter') as writer:
                writer.book.set_properties({
                    'title': tr("report_title", self.lang),
                    'subject': tr(f"kind_{report.kind}", self.lang),
                    'created': WORKBOOK_CREATED,
                })
                for sheet_name, df in self._sheets(report, include_timings).items():
                    if df.empty:
                        continue
                    # Veriyi yaz (başlık ayrıca biçimlendirilir)
                    df.to_excel(writer, sheet_name=sheet_name, index=False, header=False, startrow=1)
                    self._auto_adjust_column_widths(writer, sheet_name, df)

            logging.info(f"✅ Excel rapor yazıldı: {file_path}")
            return True
        except Exception as e:
            logging.error(f"❌ Excel'e aktarma hatası: {e}")
            return False


def export_report_to_excel(report, file_path, lang="tr", include_timings=False):
    """Kısa yol: raporu Excel'e aktar."""
    return ReportExcelExporter(lang).export(report, file_path, include_timings)
