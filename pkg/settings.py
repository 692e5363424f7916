# -*- coding: utf-8 -*-
"""
Ortam Ayarları
LRPLAB_* ortam değişkenlerini okur; hatalı değerlerde varsayılana döner.
Komut satırı bayrakları bu değerlerin üzerine yazar.
"""

from imports import *

DEFAULT_SEED = 20240101
DEFAULT_THREADS = 1
DEFAULT_MEMORY_MB = 2048.0
DEFAULT_LANG = "tr"

_ENV_KEYS = {
    'seed': 'LRPLAB_SEED',
    'threads': 'LRPLAB_THREADS',
    'memory_mb': 'LRPLAB_MEMORY_MB',
    'lang': 'LRPLAB_LANG',
}


def _read(key, convert, default, environ=None):
    """Ortam değişkenini dönüştürerek okur, başarısızsa varsayılanı döndürür."""
    environ = os.environ if environ is None else environ
    raw = environ.get(_ENV_KEYS[key])
    if raw is None or str(raw).strip() == "":
        return default
    try:
        return convert(raw)
    except (ValueError, TypeError):
        logging.warning(f"⚠️ {_ENV_KEYS[key]}={raw!r} okunamadı, varsayılan kullanılıyor: {default}")
        return default


def load_settings(environ=None):
    """
    Laboratuvar ayarlarını yükler.

    Args:
        environ (Mapping, optional): Test için ortam sözlüğü (varsayılan os.environ)

    Returns:
        dict: seed, threads, memory_mb, lang anahtarları
    """
    settings = {
        'seed': _read('seed', int, DEFAULT_SEED, environ),
        'threads': _read('threads', int, DEFAULT_THREADS, environ),
        'memory_mb': _read('memory_mb', float, DEFAULT_MEMORY_MB, environ),
        'lang': _read('lang', str, DEFAULT_LANG, environ),
    }

    if settings['threads'] < 1:
        logging.warning(f"⚠️ İş parçacığı sayısı {settings['threads']} geçersiz, 1 kullanılıyor")
        settings['threads'] = 1
    if settings['memory_mb'] <= 0:
        settings['memory_mb'] = DEFAULT_MEMORY_MB
    if settings['lang'] not in ('tr', 'en'):
        settings['lang'] = DEFAULT_LANG

    return settings
