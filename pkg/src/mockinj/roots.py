"""Root systems of types A-G in simple-root coordinates.

Every root and weight handled here is an integer vector in the basis of
simple roots, with Dynkin diagram nodes numbered as in Bourbaki.  The
stored Cartan matrix has entries C[i][j] = <alpha_i, alpha_j^vee>, so the
pairing of a vector w with the coroot alpha_i^vee is sum_j w[j] * C[j][i]
and the simple reflection s_i subtracts that multiple of alpha_i.

For G2 the short root comes first (alpha_1 short, alpha_2 long), which
makes the highest root 3*alpha_1 + 2*alpha_2.

Positive roots are generated by reflection closure starting from the
simple roots and are ordered by (height, coordinates) so that every
downstream enumeration is deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import CartanSpecError, NegativeCoordinateError

Weight = tuple[int, ...]

MAX_RANK = 8

_RANK_RANGE = {
    "A": (1, MAX_RANK),
    "B": (2, MAX_RANK),
    "C": (2, MAX_RANK),
    "D": (3, MAX_RANK),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_SPEC_RE = re.compile(r"^([A-G])([0-9]+)$")


def _classical_positive_count(letter: str, rank: int) -> int:
    if letter == "A":
        return rank * (rank + 1) // 2
    if letter in ("B", "C"):
        return rank * rank
    if letter == "D":
        return rank * (rank - 1)
    if letter == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    if letter == "F":
        return 24
    return 6  # G2


def _cartan_matrix(letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> in Bourbaki numbering."""
    C = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        C[i][j] = cij
        C[j][i] = cji

    if letter in ("A", "B", "C"):
        for i in range(rank - 1):
            edge(i, i + 1)
        if letter == "B":  # alpha_rank short
            edge(rank - 2, rank - 1, -2, -1)
        elif letter == "C":  # alpha_rank long
            edge(rank - 2, rank - 1, -1, -2)
    elif letter == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif letter == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)  # node 2 hangs off node 4
    elif letter == "F":
        edge(0, 1)
        edge(1, 2, -2, -1)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        edge(2, 3)
    else:  # G2, alpha_1 short
        edge(0, 1, -1, -3)
    return tuple(tuple(row) for row in C)


def _reflection_closure(C: tuple[tuple[int, ...], ...]) -> tuple[Weight, ...]:
    rank = len(C)
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        fresh = []
        for beta in frontier:
            for i in range(rank):
                pairing = sum(beta[j] * C[j][i] for j in range(rank))
                image = list(beta)
                image[i] -= pairing
                root = tuple(image)
                if root not in found and all(c >= 0 for c in root) and any(root):
                    found.add(root)
                    fresh.append(root)
        frontier = fresh
    return tuple(sorted(found, key=lambda r: (sum(r), r)))


@dataclass(frozen=True)
class RootSystem:
    """An irreducible root system with its full list of positive roots."""

    cartan_type: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Weight, ...]

    @property
    def spec(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    def simple_root(self, i: int) -> Weight:
        """The i-th simple root (1-based) as a coordinate vector."""
        if not 1 <= i <= self.rank:
            raise CartanSpecError(f"simple root index {i} out of range for {self.spec}")
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(self.simple_root(i) for i in range(1, self.rank + 1))

    def coroot_pairing(self, w: Weight, i: int) -> int:
        """Pairing <w, alpha_i^vee> of a root-lattice vector with a simple coroot."""
        return sum(w[j] * self.cartan_matrix[j][i - 1] for j in range(self.rank))

    def reflect(self, i: int, w: Weight) -> Weight:
        """Simple reflection s_i applied to a vector in root coordinates."""
        pairing = self.coroot_pairing(w, i)
        image = list(w)
        image[i - 1] -= pairing
        return tuple(image)

    def highest_root(self) -> Weight:
        return self.positive_roots[-1]


def parse_cartan_type(spec: str) -> RootSystem:
    """Build the root system named by a spec string such as "A2" or "G2".

    Positive roots are generated by reflection closure from the simple
    roots; the result is checked against the classical count for the type.
    """
    m = _SPEC_RE.match(spec.strip() if isinstance(spec, str) else "")
    if not m:
        raise CartanSpecError(f"malformed Cartan type {spec!r}; expected e.g. 'A2', 'G2'")
    letter, rank = m.group(1), int(m.group(2))
    lo, hi = _RANK_RANGE[letter]
    if not lo <= rank <= hi:
        raise CartanSpecError(f"rank {rank} invalid for type {letter} (allowed {lo}..{hi})")
    C = _cartan_matrix(letter, rank)
    roots = _reflection_closure(C)
    if len(roots) != _classical_positive_count(letter, rank):
        raise AssertionError(f"generated {len(roots)} positive roots for {letter}{rank}")
    return RootSystem(letter, rank, C, roots)


@dataclass(frozen=True)
class ParabolicDatum:
    """A subset J of simple-root indices (1-based) and its complement I."""

    rank: int
    J: frozenset[int]

    def __post_init__(self) -> None:
        bad = [i for i in self.J if not 1 <= i <= self.rank]
        if bad:
            raise CartanSpecError(f"J indices {sorted(bad)} out of range 1..{self.rank}")

    @property
    def I(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1)) - self.J

    def supported_on_J(self, root: Weight) -> bool:
        return all(root[i - 1] == 0 for i in self.I)


def parabolic(rs: RootSystem, J: Iterable[int]) -> ParabolicDatum:
    return ParabolicDatum(rs.rank, frozenset(J))


def parabolic_roots(rs: RootSystem, pd: ParabolicDatum) -> tuple[Weight, ...]:
    """Positive roots supported entirely on J."""
    return tuple(r for r in rs.positive_roots if pd.supported_on_J(r))


def complement_roots(rs: RootSystem, pd: ParabolicDatum) -> tuple[Weight, ...]:
    """Positive roots with at least one coordinate outside J.

    These index the polynomial generators of the coordinate ring of the
    unipotent radical of the parabolic attached to J.
    """
    if pd.rank != rs.rank:
        raise CartanSpecError("parabolic datum rank does not match root system")
    return tuple(r for r in rs.positive_roots if not pd.supported_on_J(r))


def _check_nonnegative(w: Weight, rank: int) -> None:
    if len(w) != rank:
        raise CartanSpecError(f"weight {w} has length {len(w)}, expected {rank}")
    if any(c < 0 for c in w):
        raise NegativeCoordinateError(f"weight {w} has a negative coordinate")


def i_height(w: Weight, pd: ParabolicDatum) -> int:
    """Sum of the coordinates of w on the complement I of J."""
    _check_nonnegative(w, pd.rank)
    return sum(w[i - 1] for i in pd.I)


@dataclass(frozen=True)
class CentralCharacter:
    """The I-component of a nonnegative root-lattice weight modulo ZJ.

    Stored as the unique representative with nonnegative coordinates on I;
    zero entries are dropped so equal characters compare equal.
    """

    coords: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, values: Mapping[int, int]) -> "CentralCharacter":
        for i, v in values.items():
            if v < 0:
                raise NegativeCoordinateError(f"central character value {v} at index {i}")
        return cls(tuple(sorted((i, v) for i, v in values.items() if v != 0)))

    @property
    def as_dict(self) -> dict[int, int]:
        return dict(self.coords)

    def value(self, i: int) -> int:
        return self.as_dict.get(i, 0)

    def height(self) -> int:
        return sum(v for _, v in self.coords)

    def representative(self, pd: ParabolicDatum) -> Weight:
        """Embed the character back into the root lattice, zero on J."""
        values = self.as_dict
        bad = set(values) - set(pd.I)
        if bad:
            raise CartanSpecError(f"character indices {sorted(bad)} not in I = {sorted(pd.I)}")
        return tuple(values.get(i, 0) for i in range(1, pd.rank + 1))

    def __str__(self) -> str:
        return ",".join(f"{i}={v}" for i, v in self.coords) or "0"


def central_character_of(w: Weight, pd: ParabolicDatum) -> CentralCharacter:
    """Project a nonnegative root-lattice weight to its I-coordinates."""
    _check_nonnegative(w, pd.rank)
    return CentralCharacter.from_dict({i: w[i - 1] for i in pd.I})
