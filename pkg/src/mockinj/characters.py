"""Sparse formal characters: finitely supported integer maps on a weight lattice.

Two coordinate systems occur.  Characters tagged "root" have weights that
are integer vectors in simple-root coordinates (any rank); characters
tagged "sl2" have integer weights in the fundamental-weight coordinate of
SL2, so they are Laurent polynomials in one variable q.  Multiplication is
convolution.  All multiplicities are exact integers.
"""

from __future__ import annotations

import json
from typing import Iterator, Mapping

from .errors import BasisMismatchError

BASIS_ROOT = "root"
BASIS_SL2 = "sl2"


class Character:
    """Immutable element of the group ring of the weight lattice."""

    __slots__ = ("basis", "rank", "_terms")

    def __init__(self, basis: str, rank: int, terms: Mapping) -> None:
        if basis not in (BASIS_ROOT, BASIS_SL2):
            raise BasisMismatchError(f"unknown basis tag {basis!r}")
        clean = {}
        for w, m in terms.items():
            if not isinstance(m, int):
                raise TypeError(f"multiplicity {m!r} is not an integer")
            if m == 0:
                continue
            if basis == BASIS_SL2:
                if not isinstance(w, int):
                    raise TypeError(f"sl2 weight {w!r} is not an integer")
            else:
                w = tuple(w)
                if len(w) != rank or not all(isinstance(c, int) for c in w):
                    raise TypeError(f"weight {w!r} does not fit rank {rank}")
            clean[w] = m
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "rank", 1 if basis == BASIS_SL2 else rank)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):  # characters are values
        raise AttributeError("Character is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def sl2(cls, terms: Mapping[int, int]) -> "Character":
        return cls(BASIS_SL2, 1, terms)

    @classmethod
    def root(cls, rank: int, terms: Mapping) -> "Character":
        return cls(BASIS_ROOT, rank, terms)

    @classmethod
    def zero(cls, basis: str = BASIS_SL2, rank: int = 1) -> "Character":
        return cls(basis, rank, {})

    @classmethod
    def one(cls, basis: str = BASIS_SL2, rank: int = 1) -> "Character":
        w = 0 if basis == BASIS_SL2 else (0,) * rank
        return cls(basis, rank, {w: 1})

    # -- queries ---------------------------------------------------------

    def coefficient(self, w) -> int:
        if self.basis == BASIS_ROOT:
            w = tuple(w)
        return self._terms.get(w, 0)

    def items(self) -> Iterator[tuple[object, int]]:
        return iter(sorted(self._terms.items()))

    def support(self) -> tuple:
        return tuple(sorted(self._terms))

    def term_count(self) -> int:
        return len(self._terms)

    def dim(self) -> int:
        return sum(self._terms.values())

    def is_symmetric(self) -> bool:
        """True when the coefficient at w equals the coefficient at -w (sl2 only)."""
        if self.basis != BASIS_SL2:
            raise BasisMismatchError("symmetry check needs the sl2 coordinate")
        return all(self._terms.get(-w, 0) == m for w, m in self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.basis == other.basis
            and self.rank == other.rank
            and self._terms == other._terms
        )

    __hash__ = None  # mutable-dict backed; compare by value only

    # -- arithmetic ------------------------------------------------------

    def _check_compatible(self, other: "Character") -> None:
        if not isinstance(other, Character):
            raise TypeError(f"expected Character, got {type(other).__name__}")
        if self.basis != other.basis or self.rank != other.rank:
            raise BasisMismatchError(
                f"cannot combine {self.basis}/rank {self.rank} "
                f"with {other.basis}/rank {other.rank}"
            )

    def __add__(self, other: "Character") -> "Character":
        self._check_compatible(other)
        terms = dict(self._terms)
        for w, m in other._terms.items():
            nv = terms.get(w, 0) + m
            if nv:
                terms[w] = nv
            else:
                terms.pop(w, None)
        return Character(self.basis, self.rank, terms)

    def __neg__(self) -> "Character":
        return Character(self.basis, self.rank, {w: -m for w, m in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def scale(self, n: int) -> "Character":
        return Character(self.basis, self.rank, {w: n * m for w, m in self._terms.items()})

    def __mul__(self, other) -> "Character":
        if isinstance(other, int):
            return self.scale(other)
        self._check_compatible(other)
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        if self.basis == BASIS_SL2:
            for wa, ca in a.items():
                for wb, cb in b.items():
                    w = wa + wb
                    out[w] = get(w, 0) + ca * cb
        else:
            for wa, ca in a.items():
                for wb, cb in b.items():
                    w = tuple(x + y for x, y in zip(wa, wb))
                    out[w] = get(w, 0) + ca * cb
        return Character(self.basis, self.rank, out)

    __rmul__ = __mul__

    def twist(self, r: int, p: int) -> "Character":
        """Scale every weight by p**r; the character of an r-fold Frobenius twist."""
        if r < 1:
            raise ValueError(f"twist exponent r = {r} must be >= 1")
        if p < 2:
            raise ValueError(f"p = {p} must be at least 2")
        s = p**r
        if self.basis == BASIS_SL2:
            terms = {w * s: m for w, m in self._terms.items()}
        else:
            terms = {tuple(c * s for c in w): m for w, m in self._terms.items()}
        return Character(self.basis, self.rank, terms)

    # -- serialization and display ----------------------------------------

    def to_obj(self) -> dict:
        obj: dict = {"basis": self.basis, "terms": [[w, m] for w, m in self.items()]}
        if self.basis == BASIS_ROOT:
            obj["rank"] = self.rank
            obj["terms"] = [[list(w), m] for w, m in self.items()]
        return obj

    @classmethod
    def from_obj(cls, obj: Mapping) -> "Character":
        basis = obj.get("basis")
        if basis == BASIS_SL2:
            return cls.sl2({int(w): int(m) for w, m in obj["terms"]})
        if basis == BASIS_ROOT:
            rank = int(obj["rank"])
            return cls.root(rank, {tuple(int(c) for c in w): int(m) for w, m in obj["terms"]})
        raise BasisMismatchError(f"unknown basis tag {basis!r}")

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True)

    def __repr__(self) -> str:
        return f"Character({self.basis}, {dict(sorted(self._terms.items()))})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        if self.basis != BASIS_SL2:
            return " + ".join(
                (f"{m}*" if m != 1 else "") + "e" + str(list(w))
                for w, m in sorted(self._terms.items(), reverse=True)
            )
        parts = []
        for w, m in sorted(self._terms.items(), reverse=True):
            if w == 0:
                parts.append(str(m))
            else:
                coef = "" if m == 1 else ("-" if m == -1 else f"{m}*")
                parts.append(f"{coef}q^{w}" if w != 1 else f"{coef}q")
        return " + ".join(parts).replace("+ -", "- ")


# Functional aliases matching the operation surface used elsewhere.


def char_add(a: Character, b: Character) -> Character:
    return a + b


def char_mul(a: Character, b: Character) -> Character:
    return a * b


def frobenius_twist(a: Character, r: int, p: int) -> Character:
    return a.twist(r, p)


def dim_of(a: Character) -> int:
    """Evaluation at the identity: the sum of all multiplicities."""
    return a.dim()


def is_rank1_symmetric(a: Character) -> bool:
    return a.is_symmetric()
