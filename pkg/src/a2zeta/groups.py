"""Finite permutation groups used as voltage groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import perm as P
from .perm import Perm


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """Subgroup of Sym(m) generated by labelled permutations.

    Elements are enumerated once by closure and kept in canonical order:
    breadth-first from the identity over the generators in label order.
    """

    degree: int
    generators: Mapping[str, Perm]
    elements: tuple[Perm, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        gens = {str(k): tuple(int(i) for i in v) for k, v in self.generators.items()}
        for k, g in gens.items():
            if not P.is_perm(g, self.degree):
                raise GroupError(f"generator {k} is not a permutation of {self.degree} points")
        object.__setattr__(self, "generators", dict(sorted(gens.items())))
        object.__setattr__(self, "elements", self._closure())
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.elements)})

    def _closure(self) -> tuple[Perm, ...]:
        e = P.identity(self.degree)
        seen = {e: None}
        frontier = [e]
        gens = list(self.generators.values())
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = P.mul(x, g)
                    if y not in seen:
                        seen[y] = None
                        nxt.append(y)
            frontier = nxt
        return tuple(seen)

    @classmethod
    def trivial(cls, degree: int = 1) -> "FiniteGroup":
        return cls(degree, {})

    @classmethod
    def cyclic(cls, n: int, label: str = "g") -> "FiniteGroup":
        return cls(n, {label: P.cycle(n, *range(n))})

    @property
    def identity(self) -> Perm:
        return P.identity(self.degree)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return tuple(g) in self._index

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self.generators.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and set(self.elements) == set(other.elements)

    def index(self, g: Perm) -> int:
        try:
            return self._index[tuple(g)]
        except KeyError:
            raise GroupError(f"{tuple(g)} is not an element of the group") from None

    def mul(self, *gs: Perm) -> Perm:
        if not gs:
            return self.identity
        return P.prod(*gs)

    def inv(self, g: Perm) -> Perm:
        return P.inv(g)

    def check(self, g) -> Perm:
        g = tuple(int(i) for i in g)
        if g not in self._index:
            raise GroupError(f"voltage {g} not in group")
        return g

    def is_subgroup(self, elems: Iterable[Perm]) -> bool:
        s = {tuple(g) for g in elems}
        if self.identity not in s or not s <= set(self.elements):
            return False
        return all(P.mul(a, P.inv(b)) in s for a in s for b in s)

    def subgroup(self, generators: Mapping[str, Perm]) -> "FiniteGroup":
        H = FiniteGroup(self.degree, generators)
        if not set(H.elements) <= set(self.elements):
            raise GroupError("generators do not lie in the group")
        return H

    def right_cosets(self, H: "FiniteGroup") -> list[Perm]:
        """Representatives r_i of the right cosets H r_i, first element of each in canonical order."""
        if not set(H.elements) <= set(self.elements):
            raise GroupError("H' is not a subgroup")
        seen: set[Perm] = set()
        reps = []
        for g in self.elements:
            if g in seen:
                continue
            reps.append(g)
            seen.update(P.mul(h, g) for h in H.elements)
        return reps

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": {k: list(v) for k, v in self.generators.items()}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "FiniteGroup":
        return cls(int(obj["degree"]), {k: tuple(v) for k, v in obj.get("generators", {}).items()})
