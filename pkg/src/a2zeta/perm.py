"""Permutations as tuples of images: ``p[i]`` is the image of ``i``.

The group law is composition ``mul(g, h) = g o h`` (apply ``h`` first).
"""

from __future__ import annotations

from typing import Sequence

Perm = tuple[int, ...]


def identity(m: int) -> Perm:
    return tuple(range(m))


def mul(g: Perm, h: Perm) -> Perm:
    return tuple(g[i] for i in h)


def inv(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[gi] = i
    return tuple(out)


def is_perm(p: Sequence[int], m: int | None = None) -> bool:
    n = len(p) if m is None else m
    return len(p) == n and sorted(p) == list(range(n))


def prod(*gs: Perm) -> Perm:
    out = gs[0]
    for g in gs[1:]:
        out = mul(out, g)
    return out


def order(g: Perm) -> int:
    e = identity(len(g))
    k, h = 1, g
    while h != e:
        h = mul(h, g)
        k += 1
    return k


def cycle(m: int, *orbit: int) -> Perm:
    """Permutation of ``range(m)`` cycling ``orbit[0] -> orbit[1] -> ...``."""
    p = list(range(m))
    for a, b in zip(orbit, orbit[1:] + orbit[:1]):
        p[a] = b
    return tuple(p)
