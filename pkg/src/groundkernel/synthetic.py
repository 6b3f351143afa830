"""Random closed dictionaries for benchmarks and scale tests."""

from __future__ import annotations

import random

from groundkernel.lexicon import Dictionary, Word


def synthetic_entries(n: int, mean_definientes: float = 5.0, seed: int = 0, skew: float = 1.0):
    """Entries ``w0000001: ...`` where each definition has 1..2*mean-1 words.

    Definers are drawn with index ``n * u**skew`` for uniform ``u``; ``skew > 1``
    concentrates definitions on a small frequent vocabulary, as in real
    dictionaries.  Every definiens is itself a definiendum, so the result is
    closed.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    width = len(str(n - 1))
    words = [Word(f"w{i:0{width}d}") for i in range(n)]
    top = max(1, round(2 * mean_definientes - 1))
    entries = []
    for w in words:
        k = min(rng.randint(1, top), n)
        picked = set()
        while len(picked) < k:
            picked.add(words[int(n * rng.random() ** skew)])
        entries.append((w, frozenset(picked)))
    return entries


def synthetic_dictionary(n: int, mean_definientes: float = 5.0, seed: int = 0, skew: float = 1.0) -> Dictionary:
    return Dictionary(synthetic_entries(n, mean_definientes, seed, skew))
