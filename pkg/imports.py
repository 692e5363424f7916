# -*- coding: utf-8 -*-
"""
Merkezi Import Dosyası
Tüm projedeki import'lar bu dosyada toplanmıştır
"""

# ============================================================================
# STANDART KÜTÜPHANELER
# ============================================================================
import sys
import os
import json
import logging
import time

# ============================================================================
# LOGGİNG YAPILANDIRMASI
# ============================================================================
logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(levelname)s - %(message)s'
)
import math
import hashlib
import itertools
from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property, lru_cache
from pathlib import Path
from datetime import datetime

# ============================================================================
# ÜÇÜNCÜ PARTI KÜTÜPHANELER - SAYISAL HESAPLAMA
# ============================================================================
import numpy as np
import pandas as pd
from scipy import sparse
from scipy.sparse import csgraph
from scipy import optimize, special, stats
from scipy.spatial.distance import pdist, cdist

try:
    from concurrent.futures import ThreadPoolExecutor, as_completed
    CONCURRENT_AVAILABLE = True
except ImportError:
    logging.warning("UYARI: concurrent.futures modülü eksik. Paralel denemeler seri çalışacak.")
    ThreadPoolExecutor = None
    as_completed = None
    CONCURRENT_AVAILABLE = False

# ============================================================================
# ÜÇÜNCÜ PARTI KÜTÜPHANELER - PDF İŞLEMLERİ
# ============================================================================
try:
    from reportlab.lib.pagesizes import A4, landscape
    from reportlab.lib import colors
    from reportlab.lib.styles import getSampleStyleSheet, ParagraphStyle
    from reportlab.lib.units import cm
    from reportlab.platypus import SimpleDocTemplate, Table, TableStyle, Paragraph, Spacer
    from reportlab.lib.enums import TA_CENTER, TA_LEFT
    REPORTLAB_AVAILABLE = True
except ImportError:
    logging.warning("UYARI: reportlab kütüphanesi eksik. PDF rapor işlevi devre dışı.")
    A4 = landscape = colors = getSampleStyleSheet = ParagraphStyle = cm = None
    SimpleDocTemplate = Table = TableStyle = Paragraph = Spacer = None
    TA_CENTER = TA_LEFT = None
    REPORTLAB_AVAILABLE = False

# ============================================================================
# ÜÇÜNCÜ PARTI KÜTÜPHANELER - EXCEL İŞLEMLERİ
# ============================================================================
try:
    import xlsxwriter
    XLSXWRITER_AVAILABLE = True
except ImportError:
    logging.warning("UYARI: xlsxwriter kütüphanesi eksik. Excel rapor işlevi devre dışı.")
    xlsxwriter = None
    XLSXWRITER_AVAILABLE = False

# ============================================================================
# PROJE MODÜLLERI - PDF & EXCEL EXPORT (LAZY LOADING)
# ============================================================================
# PDF ve Excel modülleri sadece ihtiyaç olduğunda yüklenecek
# Deney koşuları bu modüllere hiç dokunmaz

PDF_AVAILABLE = None  # None = henüz kontrol edilmedi
EXCEL_AVAILABLE = None  # None = henüz kontrol edilmedi

_pdf_module = None
_excel_module = None

def get_pdf_module():
    """PDF rapor modülünü lazy loading ile yükler."""
    global _pdf_module, PDF_AVAILABLE

    if PDF_AVAILABLE is None:
        try:
            import topdf
            _pdf_module = topdf
            PDF_AVAILABLE = True
            logging.info("✅ PDF rapor modülü yüklendi (lazy loading)")
        except ImportError as e:
            logging.warning(f"⚠️ PDF rapor modülü bulunamadı: {e}")
            PDF_AVAILABLE = False
            _pdf_module = None

    return _pdf_module

def get_excel_module():
    """Excel rapor modülünü lazy loading ile yükler."""
    global _excel_module, EXCEL_AVAILABLE

    if EXCEL_AVAILABLE is None:
        try:
            import toexcel
            _excel_module = toexcel
            EXCEL_AVAILABLE = True
            logging.info("✅ Excel rapor modülü yüklendi (lazy loading)")
        except ImportError as e:
            logging.warning(f"⚠️ Excel rapor modülü bulunamadı: {e}")
            EXCEL_AVAILABLE = False
            _excel_module = None

    return _excel_module

# ============================================================================
# EXPORT EDİLECEK TÜMÜ
# ============================================================================
__all__ = [
    # Standart kütüphaneler
    'sys', 'os', 'json', 'logging', 'time', 'math', 'hashlib',
    'itertools', 'deque', 'dataclass', 'field', 'replace',
    'Enum', 'cached_property', 'lru_cache', 'Path', 'datetime',

    # Sayısal hesaplama
    'np', 'pd', 'sparse', 'csgraph', 'optimize', 'special', 'stats', 'pdist', 'cdist',

    # Paralel çalışma
    'ThreadPoolExecutor', 'as_completed', 'CONCURRENT_AVAILABLE',

    # ReportLab
    'A4', 'landscape', 'colors', 'getSampleStyleSheet', 'ParagraphStyle',
    'cm', 'SimpleDocTemplate', 'Table', 'TableStyle', 'Paragraph',
    'Spacer', 'TA_CENTER', 'TA_LEFT', 'REPORTLAB_AVAILABLE',

    # Excel
    'xlsxwriter', 'XLSXWRITER_AVAILABLE',

    # Proje modülleri - PDF & Excel (Lazy Loading)
    'get_pdf_module', 'get_excel_module', 'PDF_AVAILABLE', 'EXCEL_AVAILABLE',
]
