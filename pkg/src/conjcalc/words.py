"""Conjugacy relations on words of a free semigroup.

Words are nonempty strings; each character is a letter.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

from .partition import ElementPartition
from .relations import BudgetExceeded

ORACLE_MAX_LENGTH = 8


def _check(w: str) -> str:
    if not isinstance(w, str) or not w:
        raise ValueError("words must be nonempty strings")
    return w


def parikh(w: str) -> Counter:
    """Letter multiplicities of ``w``."""
    return Counter(_check(w))


def sim_s_words(u: str, v: str) -> bool:
    """Equal letter counts."""
    return parikh(u) == parikh(v)


def sim_p1_words(u: str, v: str) -> bool:
    """``v`` is a cyclic rotation of ``u``."""
    _check(u), _check(v)
    return len(u) == len(v) and v in u + u


def sim_p1_words_literal(u: str, v: str) -> bool:
    """Direct search for ``u = pr`` and ``v = rp`` with either factor possibly empty."""
    _check(u), _check(v)
    return any(u[k:] + u[:k] == v for k in range(len(u) + 1))


def compositions(n: int) -> Iterable[tuple[int, ...]]:
    """Ordered tuples of positive parts summing to ``n``."""
    for cuts in product((False, True), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def factorizations(w: str) -> Iterable[tuple[str, ...]]:
    for parts in compositions(len(w)):
        pos, out = 0, []
        for k in parts:
            out.append(w[pos:pos + k])
            pos += k
        yield tuple(out)


@lru_cache(maxsize=4096)
def rearrangements(w: str) -> dict[str, tuple[tuple[str, ...], tuple[int, ...]]]:
    """Every word obtained by permuting the factors of some factorization of ``w``.

    Maps each such word to one witness: the factors and the order used.
    """
    found: dict[str, tuple[tuple[str, ...], tuple[int, ...]]] = {}
    for factors in factorizations(w):
        for order in permutations(range(len(factors))):
            word = "".join(factors[i] for i in order)
            found.setdefault(word, (factors, order))
    return found


def sim_s1_words_oracle(u: str, v: str, exhaustive: bool = True, *, max_length: int = ORACLE_MAX_LENGTH):
    """Brute-force factor-permutation search.

    Returns ``(related, witness)`` where the witness is ``(factors, order)``
    with ``"".join(factors[i] for i in order) == v``.  With
    ``exhaustive=False`` only reorderings of at most three factors are tried.
    """
    _check(u), _check(v)
    if len(u) != len(v):
        return False, None
    if len(u) > max_length:
        raise BudgetExceeded(f"oracle limited to words of length {max_length}")
    if exhaustive:
        hit = rearrangements(u).get(v)
        return hit is not None, hit
    for factors in factorizations(u):
        if len(factors) > 3:
            continue
        for order in permutations(range(len(factors))):
            if "".join(factors[i] for i in order) == v:
                return True, (factors, order)
    return False, None


def words_of_length(alphabet: Sequence[str], n: int) -> list[str]:
    return ["".join(p) for p in product(alphabet, repeat=n)]


def commuting_generation_test(alphabet: Sequence[str], relation_pairs: Iterable[tuple[str, str]], n: int,
                              *, max_words: int = 1 << 16) -> bool:
    """Does the congruence generated by ``relation_pairs`` match letter-count classes on length ``n``?

    Only words of length exactly ``n`` are involved because every generating
    pair preserves length; a factor equal to one side of a pair may be swapped
    for the other side anywhere inside a word.
    """
    alphabet = sorted(set(alphabet))
    pairs = []
    for a, b in relation_pairs:
        if len(a) != len(b) or Counter(a) != Counter(b):
            raise ValueError(f"pair ({a!r}, {b!r}) does not preserve letter counts")
        if set(a) - set(alphabet):
            raise ValueError(f"pair ({a!r}, {b!r}) uses letters outside the alphabet")
        if a != b:
            pairs.append((a, b))
    if len(alphabet) ** n > max_words:
        raise BudgetExceeded(f"{len(alphabet) ** n} words of length {n} exceed {max_words}")
    words = words_of_length(alphabet, n)
    index = {w: i for i, w in enumerate(words)}
    part = ElementPartition(len(words))
    for w in words:
        for a, b in pairs:
            start = w.find(a)
            while start != -1:
                part.union(index[w], index[w[:start] + b + w[start + len(a):]])
                start = w.find(a, start + 1)
    parikh_part = ElementPartition.from_labels([tuple(sorted(Counter(w).items())) for w in words])
    return part == parikh_part


def all_commuting_pairs(alphabet: Sequence[str]) -> list[tuple[str, str]]:
    return [(a + b, b + a) for a in alphabet for b in alphabet if a < b]
