# -*- coding: utf-8 -*-
"""
PDF Dışa Aktarma Modülü
Deney raporunun özetini ReportLab ile PDF'e dönüştürür:
başlık, yapılandırma, özet ve sınır tabloları.
"""

from imports import *
from locales import tr
from reports import cell_value

# Tek bir tabloda gösterilecek en fazla satır
MAX_TABLE_ROWS = 200


# ============================================================================
# RAPOR PDF DIŞA AKTARICI
# ============================================================================
class ReportPDFExporter:
    """
    Deney raporunu PDF'e dönüştüren sınıf.
    Deneme satırları tablo olarak basılmaz; PDF özet içindir.
    """

    def __init__(self, lang="tr"):
        self.lang = lang
        self.page_width, self.page_height = landscape(A4)
        self.styles = getSampleStyleSheet()
        self._setup_custom_styles()

    # ------------------------------------------------------------------------
    # STİL AYARLARI
    # ------------------------------------------------------------------------
    def _setup_custom_styles(self):
        """Rapor için başlık, alt başlık ve hücre stillerini oluşturur."""
        self.styles.add(ParagraphStyle(
            name='MainTitle',
            parent=self.styles['Title'],
            fontName='Helvetica-Bold',
            fontSize=18,
            spaceAfter=20,
            spaceBefore=10,
            alignment=TA_CENTER,
            textColor=colors.HexColor('#1a365d'),
            leading=22
        ))

        self.styles.add(ParagraphStyle(
            name='SubTitle',
            parent=self.styles['Heading2'],
            fontName='Helvetica-Bold',
            fontSize=13,
            spaceAfter=10,
            spaceBefore=12,
            alignment=TA_LEFT,
            textColor=colors.HexColor('#2d3748'),
            leading=16
        ))

        self.styles.add(ParagraphStyle(
            name='CellText',
            parent=self.styles['Normal'],
            fontName='Helvetica',
            fontSize=7,
            leading=8,
            alignment=TA_LEFT
        ))

    # ------------------------------------------------------------------------
    # TABLOLAR
    # ------------------------------------------------------------------------
    def _format(self, value):
        value = cell_value(value)
        if isinstance(value, float):
            return f"{value:.6g}"
        return Paragraph(str(value), self.styles['CellText']) if value is not None else "-"

    def _table(self, records):
        """Sözlük listesinden başlıklı tablo; boşsa 'veri yok' paragrafı."""
        if not records:
            return Paragraph(tr("no_data", self.lang), self.styles['Normal'])
        columns = list(records[0].keys())
        for record in records[1:]:
            for key in record:
                if key not in columns:
                    columns.append(key)
        data = [columns]
        for record in records[:MAX_TABLE_ROWS]:
            data.append([self._format(record.get(col)) for col in columns])

        table = Table(data, repeatRows=1)
        table.setStyle(TableStyle([
            ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor('#6C5DD3')),
            ('TEXTCOLOR', (0, 0), (-1, 0), colors.white),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, 0), 8),
            ('ALIGN', (0, 0), (-1, 0), 'CENTER'),
            ('FONTNAME', (0, 1), (-1, -1), 'Helvetica'),
            ('FONTSIZE', (0, 1), (-1, -1), 7),
            ('ROWBACKGROUNDS', (0, 1), (-1, -1), [colors.white, colors.HexColor('#f9f9f9')]),
            ('GRID', (0, 0), (-1, -1), 0.5, colors.HexColor('#d0d0d0')),
            ('VALIGN', (0, 0), (-1, -1), 'MIDDLE'),
        ]))
        return table

    def _story(self, report, include_timings):
        lang = self.lang
        story = [
            Paragraph(tr("report_title", lang), self.styles['MainTitle']),
            Paragraph(f"{tr('report_kind', lang)}: {tr(f'kind_{report.kind}', lang)}", self.styles['Normal']),
            Spacer(1, 12),
            Paragraph(tr("section_config", lang), self.styles['SubTitle']),
            self._table([{tr("col_key", lang): k, tr("col_value", lang): v}
                         for k, v in sorted(report.config.items())]),
            Paragraph(tr("section_summary", lang), self.styles['SubTitle']),
            self._table(report.summary),
            Paragraph(tr("section_bounds", lang), self.styles['SubTitle']),
            self._table(report.bounds),
        ]
        for name, records in sorted(report.tables.items()):
            story.append(Paragraph(name, self.styles['SubTitle']))
            story.append(self._table(records))
        if include_timings and report.timings:
            story.append(Paragraph(tr("section_timings", lang), self.styles['SubTitle']))
            story.append(self._table([report.timings]))
        return story

    def _add_footer(self, canvas, doc):
        canvas.saveState()
        canvas.setFont('Helvetica', 9)
        canvas.setFillColor(colors.HexColor('#7f8c8d'))
        canvas.drawRightString(self.page_width - 2 * cm, 1 * cm, str(canvas.getPageNumber()))
        canvas.restoreState()

    # ------------------------------------------------------------------------
    # PDF DIŞA AKTARMA
    # ------------------------------------------------------------------------
    def export(self, report, file_path, include_timings=False):
        """
        Raporu PDF'e aktarır.

        Returns:
            bool: Başarılı ise True, aksi halde False
        """
        if not REPORTLAB_AVAILABLE:
            logging.error("❌ reportlab yüklü değil, PDF oluşturulamadı")
            return False
        try:
            doc = SimpleDocTemplate(
                str(file_path), pagesize=landscape(A4),
                leftMargin=1.5 * cm, rightMargin=1.5 * cm, topMargin=1.5 * cm, bottomMargin=1.5 * cm,
                title=tr("report_title", self.lang), invariant=1,
            )
            doc.build(self._story(report, include_timings),
                      onFirstPage=self._add_footer, onLaterPages=self._add_footer)
            logging.info(f"✅ PDF rapor yazıldı: {file_path}")
            return True
        except Exception as e:
            logging.error(f"❌ PDF oluşturma hatası: {e}")
            return False


def export_report_to_pdf(report, file_path, lang="tr", include_timings=False):
    """Kısa yol: raporu PDF'e aktar."""
    return ReportPDFExporter(lang).export(report, file_path, include_timings)
