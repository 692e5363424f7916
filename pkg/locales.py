# locales.py
# -*- coding: utf-8 -*-

"""
Uzun Menzilli Süzülme Laboratuvarı için Yerelleştirme Modülü.
Komut satırı mesajları ile Excel/PDF rapor etiketlerini içerir.
"""

# Varsayılan dil
DEFAULT_LANGUAGE = "tr"

# Çeviri sözlüğü
TRANSLATIONS = {
    "tr": {
        # Genel
        "app_title": "LRP Laboratuvarı",
        "warning": "Uyarı",
        "error": "Hata",
        "success": "Başarılı",

        # Komut satırı
        "cli_description": "Uzun menzilli süzülme deneyleri ve kuramsal sınırlar",
        "cli_invalid_input": "Geçersiz girdi",
        "cli_resource_error": "Kaynak sınırı",
        "cli_invariant": "Değişmez ihlali",
        "cli_report_written": "Rapor yazıldı",
        "cli_export_failed": "Rapor dışa aktarılamadı",
        "cli_edges_written": "Kenar listesi yazıldı",
        "cli_delta": "Δ(s, d)",
        "cli_slope": "Uydurulan eğim",

        # Rapor başlıkları
        "report_title": "Deney Raporu",
        "report_kind": "Deney türü",
        "report_date": "Rapor Tarihi",
        "section_config": "Yapılandırma",
        "section_summary": "Özet",
        "section_bounds": "Sınır Karşılaştırmaları",
        "section_rows": "Deneme Satırları",
        "section_timings": "Süreler",
        "sheet_rows": "Denemeler",
        "sheet_summary": "Özet",
        "sheet_bounds": "Sınırlar",
        "sheet_config": "Yapılandırma",
        "col_key": "Anahtar",
        "col_value": "Değer",
        "no_data": "Veri yok",

        # Deney türleri
        "kind_cluster-fraction": "En büyük küme oranı",
        "kind_distance-scaling": "Kimyasal uzaklık ölçeklemesi",
        "kind_dense-density": "Yoğun site yoğunluğu",
        "kind_complete-graph": "Tam graf kuyruk sınırı",
        "kind_block-renorm": "Blok yeniden normalizasyonu",
        "kind_hierarchy-audit": "Hiyerarşi denetimi",
        "kind_diameter-scaling": "Çap ölçeklemesi",
        "kind_theory": "Kuramsal tablolar",
    },
    "en": {
        # General
        "app_title": "LRP Laboratory",
        "warning": "Warning",
        "error": "Error",
        "success": "Success",

        # Command line
        "cli_description": "Long-range percolation experiments and theoretical bounds",
        "cli_invalid_input": "Invalid input",
        "cli_resource_error": "Resource limit",
        "cli_invariant": "Invariant violation",
        "cli_report_written": "Report written",
        "cli_export_failed": "Report export failed",
        "cli_edges_written": "Edge list written",
        "cli_delta": "Delta(s, d)",
        "cli_slope": "Fitted slope",

        # Report headings
        "report_title": "Experiment Report",
        "report_kind": "Experiment kind",
        "report_date": "Report Date",
        "section_config": "Configuration",
        "section_summary": "Summary",
        "section_bounds": "Bound Comparisons",
        "section_rows": "Trial Rows",
        "section_timings": "Timings",
        "sheet_rows": "Trials",
        "sheet_summary": "Summary",
        "sheet_bounds": "Bounds",
        "sheet_config": "Config",
        "col_key": "Key",
        "col_value": "Value",
        "no_data": "No data",

        # Experiment kinds
        "kind_cluster-fraction": "Largest cluster fraction",
        "kind_distance-scaling": "Chemical distance scaling",
        "kind_dense-density": "Dense site density",
        "kind_complete-graph": "Complete graph tail bound",
        "kind_block-renorm": "Block renormalization",
        "kind_hierarchy-audit": "Hierarchy audit",
        "kind_diameter-scaling": "Diameter scaling",
        "kind_theory": "Theory tables",
    }
}

def get_text(key, lang="tr"):
    """
    Girilen anahtar ve dile göre çeviri metnini döndürür.
    Çeviri bulunamazsa anahtarı döndürür.
    """
    lang_dict = TRANSLATIONS.get(lang, TRANSLATIONS.get(DEFAULT_LANGUAGE))
    return lang_dict.get(key, key)

# Daha kolay kullanım için takma ad
tr = get_text
