"""Modular character arithmetic for SL2 in characteristic p.

Weights live in X(T) = Z (fundamental-weight coordinate), so characters
are Laurent polynomials in q.  Simple characters come from the tensor
factorization over base-p digits,

    ch L(lam) = prod_i twist^i( ch L(d_i) ),    lam = sum d_i p^i,

with the restricted characters ch L(d) = q^d + q^(d-2) + ... + q^(-d) for
0 <= d < p.  The family {ch L(lam)} is unitriangular against the monomial
basis (highest term q^lam with coefficient 1), so greedy peeling from the
top weight expands any symmetric Laurent element uniquely in it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .characters import BASIS_SL2, Character
from .errors import NonSymmetricCharacterError, NotModuleCharacterError


def _require_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p = {p} is not prime")


def base_p_digits(lam: int, p: int) -> list[int]:
    """Little-endian base-p digits of lam, no trailing zeros; [] for lam = 0."""
    _require_prime(p)
    if lam < 0:
        raise ValueError(f"lam = {lam} must be nonnegative")
    digits = []
    while lam:
        digits.append(lam % p)
        lam //= p
    return digits


def weyl_char(lam: int) -> Character:
    """Character of the Weyl module of highest weight lam: the q-analog of lam+1."""
    if lam < 0:
        raise ValueError(f"lam = {lam} must be nonnegative")
    return Character.sl2({w: 1 for w in range(-lam, lam + 1, 2)})


@lru_cache(maxsize=512)
def _simple_char(lam: int, p: int) -> Character:
    if lam < p:
        return weyl_char(lam)
    rest = _simple_char(lam // p, p).twist(1, p)
    d = lam % p
    return rest if d == 0 else weyl_char(d) * rest


def simple_char(lam: int, p: int) -> Character:
    """Character of the simple module L(lam) in characteristic p."""
    _require_prime(p)
    if lam < 0:
        raise ValueError(f"lam = {lam} must be nonnegative")
    return _simple_char(lam, p)


def simple_dim(lam: int, p: int) -> int:
    """dim L(lam) from the digit product; the character gives the same number."""
    return 1 if lam == 0 else _prod(d + 1 for d in base_p_digits(lam, p))


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


@dataclass
class SimpleDecomposition:
    """Expansion of a symmetric character in the basis {ch L(lam)}.

    genuine is True when every multiplicity is nonnegative, i.e. the input
    could be the character of an actual module.
    """

    multiplicities: dict[int, int]
    genuine: bool

    def coefficient(self, lam: int) -> int:
        return self.multiplicities.get(lam, 0)

    def reconstruct(self, p: int) -> Character:
        total = Character.zero()
        for lam, m in self.multiplicities.items():
            total = total + simple_char(lam, p).scale(m)
        return total

    def to_obj(self) -> dict:
        return {
            "multiplicities": [[lam, m] for lam, m in sorted(self.multiplicities.items())],
            "genuine": self.genuine,
        }


def decompose_into_simples(c: Character, p: int) -> SimpleDecomposition:
    """Unique expansion of a symmetric sl2 character in simple characters.

    Greedy peeling from the highest weight; terminates because each step
    removes the current top term.  Negative multiplicities are reported
    rather than rejected, with genuine=False.
    """
    _require_prime(p)
    if c.basis != BASIS_SL2:
        raise NonSymmetricCharacterError("decomposition needs an sl2-coordinate character")
    if not c.is_symmetric():
        raise NonSymmetricCharacterError(f"character {c} is not symmetric under q -> 1/q")
    terms = {w: m for w, m in c.items()}
    mults: dict[int, int] = {}
    while terms:
        top = max(terms)
        m = terms.pop(top)
        for w, cw in _simple_char(top, p).items():
            if w == top:
                continue
            nv = terms.get(w, 0) - m * cw
            if nv:
                terms[w] = nv
            else:
                terms.pop(w, None)
        mults[top] = mults.get(top, 0) + m
    return SimpleDecomposition(mults, all(m >= 0 for m in mults.values()))


def tensor_comp_mult(mu: int, nu: int, lam: int, p: int) -> int:
    """Composition multiplicity [L(mu) (x) L(nu) : L(lam)]."""
    dec = decompose_into_simples(simple_char(mu, p) * simple_char(nu, p), p)
    return dec.coefficient(lam)


def trivial_factor_in_tensor_with_L1(mu: int) -> int:
    """[L(mu) (x) L(1) : L(0)] in characteristic 2."""
    return tensor_comp_mult(mu, 1, 0, 2)


def trivial_factor_sweep(lo: int, hi: int) -> dict[int, int]:
    """Nonzero values of [L(mu) (x) L(1) : L(0)] at p = 2 for lo <= mu <= hi."""
    hits: dict[int, int] = {}
    for mu in range(lo, hi + 1):
        m = trivial_factor_in_tensor_with_L1(mu)
        if m:
            hits[mu] = m
    return hits


def zero_weight_mult(lam: int, p: int) -> int:
    """Multiplicity of the zero weight in L(lam), by the even-digit criterion.

    A weight of L(lam) is a sum over i of p^i * w_i where w_i is a weight
    of the restricted factor for digit d_i, so |w_i| <= d_i < p and w_i has
    the parity of d_i.  The top nonzero p^i * w_i dominates all lower
    terms, so zero forces every w_i = 0; that needs every digit even, and
    then the choice is unique.
    """
    _require_prime(p)
    if lam < 0:
        raise ValueError(f"lam = {lam} must be nonnegative")
    return 1 if all(d % 2 == 0 for d in base_p_digits(lam, p)) else 0


def hom_dim_into_injective_tensor(mu: int, lam: int, m: Character, p: int) -> int:
    """dim Hom(L(mu), I(lam) (x) M) = [L(mu) (x) M^* : L(lam)] for M with character m.

    For sl2 the dual has the same character (weights are symmetric), so the
    answer is the coefficient of L(lam) in ch L(mu) * m.  m must be a
    genuine module character: symmetric with nonnegative simple
    multiplicities.
    """
    _require_prime(p)
    if m.basis != BASIS_SL2:
        raise NotModuleCharacterError("module character must use the sl2 coordinate")
    if not m.is_symmetric():
        raise NotModuleCharacterError(f"{m} is not symmetric, so it is not a module character")
    if not decompose_into_simples(m, p).genuine:
        raise NotModuleCharacterError(f"{m} has a negative simple multiplicity at p = {p}")
    return decompose_into_simples(simple_char(mu, p) * m, p).coefficient(lam)


# -- socle certificate for the induction from the torus normalizer ----------


@dataclass(frozen=True)
class SocleCaseRecord:
    lam: int
    case: str  # "odd" or "even"
    halves_to: int | None = None

    def to_obj(self) -> dict:
        obj: dict = {"lam": self.lam, "case": self.case}
        if self.halves_to is not None:
            obj["halves_to"] = self.halves_to
        return obj


@dataclass(frozen=True)
class SocleCertificate:
    """Evidence that only the trivial module maps into ind from WT, p = 2.

    A simple L(lam) admits a nonzero WT-invariant functional only through
    its zero weight space, so the certificate checks that L(lam) has no
    zero weight for 0 < lam <= lam_max.  Alongside the direct sweep it
    replays the two induction steps on actual characters: odd lam has only
    odd weights, and even lam is the Frobenius twist of lam/2.
    """

    lam_max: int
    prime: int
    holds: bool
    trivial_zero_weight_mult: int
    positive_all_vanish: bool
    base_case_ok: bool
    induction_ok: bool
    odd_cases: int
    halving_cases: int
    trace: tuple[SocleCaseRecord, ...]

    def to_obj(self) -> dict:
        return {
            "lam_max": self.lam_max,
            "p": self.prime,
            "holds": self.holds,
            "trivial_zero_weight_mult": self.trivial_zero_weight_mult,
            "positive_all_vanish": self.positive_all_vanish,
            "base_case_ok": self.base_case_ok,
            "induction_ok": self.induction_ok,
            "odd_cases": self.odd_cases,
            "halving_cases": self.halving_cases,
            "trace": [r.to_obj() for r in self.trace],
        }


def socle_certificate_WT(lam_max: int) -> SocleCertificate:
    """Certify soc(ind_{WT}^G k) = k over 0 < lam <= lam_max at p = 2."""
    p = 2
    if lam_max < 1:
        raise ValueError(f"lam_max = {lam_max} must be at least 1")

    base_case_ok = simple_char(1, p) == Character.sl2({1: 1, -1: 1})
    positive_all_vanish = True
    induction_ok = True
    odd_cases = 0
    halving_cases = 0
    trace: list[SocleCaseRecord] = []

    for lam in range(1, lam_max + 1):
        ch = simple_char(lam, p)
        if ch.coefficient(0) != 0 or zero_weight_mult(lam, p) != 0:
            positive_all_vanish = False
        if lam % 2 == 1:
            odd_cases += 1
            if any(w % 2 == 0 for w in ch.support()):
                induction_ok = False
            trace.append(SocleCaseRecord(lam, "odd"))
        else:
            halving_cases += 1
            if ch != simple_char(lam // 2, p).twist(1, p):
                induction_ok = False
            trace.append(SocleCaseRecord(lam, "even", halves_to=lam // 2))

    trivial = simple_char(0, p).coefficient(0)
    holds = base_case_ok and induction_ok and positive_all_vanish and trivial == 1
    return SocleCertificate(
        lam_max=lam_max,
        prime=p,
        holds=holds,
        trivial_zero_weight_mult=trivial,
        positive_all_vanish=positive_all_vanish,
        base_case_ok=base_case_ok,
        induction_ok=induction_ok,
        odd_cases=odd_cases,
        halving_cases=halving_cases,
        trace=tuple(trace),
    )


@lru_cache(maxsize=8)
def simple_char_table(max_lam: int, p: int) -> tuple[tuple[int, int], ...]:
    """(dim L(lam), zero-weight coefficient) for lam = 0..max_lam, from full characters.

    One pass through the actual character computation; the per-lam scalars
    are small, so the table is cheap to keep around for repeated checks.
    """
    _require_prime(p)
    rows = []
    for lam in range(max_lam + 1):
        ch = _simple_char(lam, p)
        rows.append((ch.dim(), ch.coefficient(0)))
    return tuple(rows)
