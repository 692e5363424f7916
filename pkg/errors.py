# -*- coding: utf-8 -*-
"""
Hata Sınıfları
Laboratuvarın tüm modülleri bu hiyerarşiyi kullanır.
CLI çıkış kodları bu sınıflara göre belirlenir.
"""

# ============================================================================
# TEMEL HATA
# ============================================================================
class LabError(Exception):
    """Laboratuvar kaynaklı tüm hataların kökü."""


# ============================================================================
# GİRDİ HATALARI (çıkış kodu 1)
# ============================================================================
class InvalidInputError(LabError, ValueError):
    """Geçersiz parametre, boyut uyuşmazlığı, kutu dışı nokta vb."""


class DivergenceError(InvalidInputError):
    """Istenen büyüklük sonsuza ıraksıyor (ör. s ≥ 2d için Δ)."""


# ============================================================================
# KAYNAK HATALARI (çıkış kodu 2)
# ============================================================================
class ResourceLimitError(LabError, MemoryError):
    """
    Örnekleme bellek bütçesini aşıyor.

    Args:
        required_mb (float): Hesaplanan bellek ihtiyacı
        budget_mb (float): Geçerli bütçe
    """

    def __init__(self, required_mb, budget_mb):
        self.required_mb = float(required_mb)
        self.budget_mb = float(budget_mb)
        super().__init__(
            f"required ~{self.required_mb:.1f} MB exceeds memory budget {self.budget_mb:.1f} MB"
        )


# ============================================================================
# DEĞİŞMEZ İHLALİ
# ============================================================================
class InvariantViolation(LabError):
    """Yapısal olarak garanti edilen bir özellik tutmadı."""
