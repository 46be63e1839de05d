"""Weight spaces and central-character blocks of the coordinate ring k[U_J].

The ring is a polynomial ring with one generator of weight gamma for each
positive root gamma outside the parabolic subset J.  The dimension of the
graded piece at a weight w is the number of exponent vectors (n_gamma)
with sum n_gamma * gamma = w, a vector partition count.

Grouping graded pieces by their image modulo ZJ gives the blocks indexed
by central characters of the Levi center.  Each block is finite
dimensional for a reason the code below leans on directly: every
generator has at least one coordinate on I = complement(J), so any
exponent vector contributing to a weight with I-part lam satisfies

    sum_gamma n_gamma <= i_height(lam).

fiber_support enumerates exactly that simplex of exponent vectors and
cross-checks every block entry against the memoized partition count, so a
violation of the bound cannot pass silently.
"""

from __future__ import annotations

import itertools
import json
import threading
from collections import OrderedDict
from dataclasses import dataclass
from pathlib import Path

from .errors import BoxLimitExceededError, CacheFormatError, CartanSpecError
from .roots import (
    CentralCharacter,
    ParabolicDatum,
    RootSystem,
    Weight,
    central_character_of,
    complement_roots,
    i_height,
)

DEFAULT_BOX_LIMIT = 24

_CACHE_SCHEMA = "kuj-partition-memo/1"


class PartitionTable:
    """Memoized vector partition counts over the generators of k[U_J].

    The recursion peels generators from the end of the fixed root order.
    Entries are kept per (recursion level, weight); the public snapshot and
    the persisted cache expose only the full-generator-set level, which is
    the map weight -> dim k[U_J]_weight.  Access is serialized on a lock so
    concurrent callers see pure-function behavior.
    """

    def __init__(
        self,
        rs: RootSystem,
        pd: ParabolicDatum,
        cache_limit: int | None = None,
    ) -> None:
        if pd.rank != rs.rank:
            raise CartanSpecError("parabolic datum rank does not match root system")
        self.root_system = rs
        self.parabolic = pd
        self.generators = complement_roots(rs, pd)
        self.cache_limit = cache_limit
        self._memo: OrderedDict[tuple[int, Weight], int] = OrderedDict()
        self._lock = threading.Lock()

    def count(self, w: Weight) -> int:
        """dim k[U_J]_w; zero when w leaves the nonnegative cone."""
        w = tuple(w)
        if len(w) != self.root_system.rank:
            raise CartanSpecError(f"weight {w} has wrong length for {self.root_system.spec}")
        if any(c < 0 for c in w):
            return 0
        with self._lock:
            return self._count(len(self.generators), w)

    def _count(self, level: int, w: Weight) -> int:
        if level == 0:
            return 1 if not any(w) else 0
        key = (level, w)
        memo = self._memo
        if key in memo:
            memo.move_to_end(key)
            return memo[key]
        gamma = self.generators[level - 1]
        total = 0
        v = w
        while min(v) >= 0:
            total += self._count(level - 1, v)
            v = tuple(a - b for a, b in zip(v, gamma))
        memo[key] = total
        if self.cache_limit is not None and len(memo) > self.cache_limit:
            memo.popitem(last=False)
        return total

    def memo_snapshot(self) -> dict[Weight, int]:
        """Fully-resolved entries: weight -> dim k[U_J]_weight."""
        top = len(self.generators)
        with self._lock:
            return {w: c for (level, w), c in self._memo.items() if level == top}

    def memo_size(self) -> int:
        with self._lock:
            return len(self._memo)

    # -- persistence -------------------------------------------------------

    def save_cache(self, path: str | Path) -> int:
        entries = sorted(self.memo_snapshot().items())
        obj = {
            "schema": _CACHE_SCHEMA,
            "type": self.root_system.spec,
            "J": sorted(self.parabolic.J),
            "entries": [[list(w), c] for w, c in entries],
        }
        Path(path).write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n", encoding="utf-8")
        return len(entries)

    def load_cache(self, path: str | Path) -> int:
        """Merge persisted entries; raises CacheFormatError on any defect."""
        try:
            obj = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise CacheFormatError(f"unreadable cache file {path}: {exc}") from exc
        if not isinstance(obj, dict) or obj.get("schema") != _CACHE_SCHEMA:
            raise CacheFormatError(f"cache file {path} has unexpected schema")
        if obj.get("type") != self.root_system.spec or obj.get("J") != sorted(self.parabolic.J):
            raise CacheFormatError(f"cache file {path} belongs to a different table")
        top = len(self.generators)
        loaded = 0
        try:
            with self._lock:
                for w, c in obj["entries"]:
                    w = tuple(int(x) for x in w)
                    if len(w) != self.root_system.rank or int(c) < 0:
                        raise ValueError(f"bad entry {w}:{c}")
                    self._memo[(top, w)] = int(c)
                    loaded += 1
        except (KeyError, TypeError, ValueError) as exc:
            raise CacheFormatError(f"corrupt entries in cache file {path}: {exc}") from exc
        return loaded


_shared_tables: dict[tuple[str, frozenset[int]], PartitionTable] = {}
_shared_lock = threading.Lock()


def shared_table(rs: RootSystem, pd: ParabolicDatum) -> PartitionTable:
    key = (rs.spec, pd.J)
    with _shared_lock:
        table = _shared_tables.get(key)
        if table is None:
            table = PartitionTable(rs, pd)
            _shared_tables[key] = table
        return table


def partition_count(rs: RootSystem, pd: ParabolicDatum, w: Weight) -> int:
    """dim k[U_J]_w via the shared memoized table for (type, J)."""
    return shared_table(rs, pd).count(w)


def brute_force_partition_count(
    rs: RootSystem,
    pd: ParabolicDatum,
    w: Weight,
    box_limit: int = DEFAULT_BOX_LIMIT,
) -> int:
    """Independent oracle: enumerate every exponent vector in the coordinate box.

    No memoization and no recursion sharing with partition_count; every
    candidate is checked against the target weight directly.
    """
    w = tuple(w)
    if len(w) != rs.rank:
        raise CartanSpecError(f"weight {w} has wrong length for {rs.spec}")
    if any(c < 0 for c in w):
        return 0
    if any(c > box_limit for c in w):
        raise BoxLimitExceededError(f"weight {w} exceeds the brute-force box limit {box_limit}")
    gens = complement_roots(rs, pd)
    max_exp = [min(w[i] // g[i] for i in range(rs.rank) if g[i] > 0) for g in gens]
    hits = 0
    for exps in itertools.product(*(range(m + 1) for m in max_exp)):
        total = tuple(sum(e * g[i] for e, g in zip(exps, gens)) for i in range(rs.rank))
        if total == w:
            hits += 1
    return hits


@dataclass(frozen=True)
class FiberReport:
    """All weights of one central-character block of k[U_J], with dimensions."""

    chi: CentralCharacter
    representative: Weight
    exponent_bound: int
    entries: tuple[tuple[Weight, int], ...]
    total_dim: int

    def to_obj(self) -> dict:
        return {
            "chi": {str(i): v for i, v in self.chi.coords},
            "representative": list(self.representative),
            "exponent_bound": self.exponent_bound,
            "entries": [[list(w), d] for w, d in self.entries],
            "total_dim": self.total_dim,
        }


def fiber_support(
    rs: RootSystem,
    pd: ParabolicDatum,
    chi: CentralCharacter,
    table: PartitionTable | None = None,
) -> FiberReport:
    """Enumerate the block k[U_J]_chi = sum over mu in NJ of k[U_J]_{lam+mu}.

    lam is the nonnegative I-representative of chi.  Exponent vectors are
    swept over the simplex sum n_gamma <= i_height(lam); weights whose
    I-part matches lam are collected with their counts.  Each count is then
    re-derived through the memoized recursion, which would disagree if any
    solution escaped the simplex.
    """
    lam = chi.representative(pd)
    bound = i_height(lam, pd)
    gens = complement_roots(rs, pd)
    i_idx = tuple(i - 1 for i in sorted(pd.I))
    lam_i = tuple(lam[i] for i in i_idx)

    counts: dict[Weight, int] = {}
    zero = tuple(0 for _ in range(rs.rank))

    def sweep(idx: int, budget: int, acc: Weight) -> None:
        if any(acc[i] > lam[i] for i in i_idx):
            return  # I-coordinates only grow; overshoot cannot recover
        if idx == len(gens):
            if tuple(acc[i] for i in i_idx) == lam_i:
                counts[acc] = counts.get(acc, 0) + 1
            return
        g = gens[idx]
        v = acc
        for t in range(budget + 1):
            sweep(idx + 1, budget - t, v)
            v = tuple(a + b for a, b in zip(v, g))

    sweep(0, bound, zero)

    table = table or shared_table(rs, pd)
    for w, c in counts.items():
        full = table.count(w)
        if full != c:
            raise RuntimeError(
                f"exponent-sum bound violated at weight {w}: "
                f"bounded sweep found {c}, partition count is {full}"
            )

    entries = tuple(sorted(counts.items(), key=lambda e: (sum(e[0]), e[0])))
    return FiberReport(
        chi=chi,
        representative=lam,
        exponent_bound=bound,
        entries=entries,
        total_dim=sum(counts.values()),
    )


def fiber_dimension(
    rs: RootSystem,
    pd: ParabolicDatum,
    chi: CentralCharacter,
    table: PartitionTable | None = None,
) -> int:
    """dim k[U_J]_chi; finite by the exponent-sum bound."""
    return fiber_support(rs, pd, chi, table=table).total_dim


def weight_block_character(rs: RootSystem, pd: ParabolicDatum, w: Weight) -> CentralCharacter:
    """Central character acting on the graded piece at w."""
    return central_character_of(w, pd)
