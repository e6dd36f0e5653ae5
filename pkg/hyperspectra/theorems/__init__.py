"""Плагины проверки теорем; загружаются hyperspectra.registry.load_theorems()."""
