"""Existence criterion for proper mock injective modules.

A linear algebraic group, split over a finite subfield, admits a mock
injective module that is not injective exactly when it fails to be
linearly reductive in characteristic p: either the identity component is
not a torus, or p divides the order of the component group.  The group
data kept here is exactly as coarse as that criterion needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import roots
from .errors import CartanSpecError

TORUS = "torus"
REDUCTIVE = "reductive"


def _require_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p = {p} is not prime")


@dataclass(frozen=True)
class GroupDatum:
    """Identity-component kind plus component-group order.

    The split-over-a-finite-subfield hypothesis is assumed, not checked.
    """

    kind: str  # TORUS or REDUCTIVE
    torus_rank: int | None
    root_type: str | None
    component_group_order: int

    def __post_init__(self) -> None:
        if self.component_group_order < 1:
            raise ValueError("component group order must be positive")
        if self.kind == TORUS:
            if self.torus_rank is None or self.torus_rank < 0:
                raise ValueError("torus rank must be a nonnegative integer")
        elif self.kind == REDUCTIVE:
            if not self.root_type:
                raise CartanSpecError("reductive identity component needs a Cartan type")
            roots.parse_cartan_type(self.root_type)  # validates
        else:
            raise ValueError(f"unknown identity component kind {self.kind!r}")

    @classmethod
    def torus(cls, rank: int, component_group_order: int = 1) -> "GroupDatum":
        return cls(TORUS, rank, None, component_group_order)

    @classmethod
    def reductive(cls, type_spec: str, component_group_order: int = 1) -> "GroupDatum":
        return cls(REDUCTIVE, None, type_spec, component_group_order)

    def describe(self) -> str:
        if self.kind == TORUS:
            head = f"torus of rank {self.torus_rank}"
        else:
            head = f"reductive group of type {self.root_type}"
        return f"{head}, component group of order {self.component_group_order}"

    def to_obj(self) -> dict:
        obj: dict = {"kind": self.kind, "component_group_order": self.component_group_order}
        if self.kind == TORUS:
            obj["torus_rank"] = self.torus_rank
        else:
            obj["root_type"] = self.root_type
        return obj


def is_linearly_reductive(g: GroupDatum, p: int) -> bool:
    """True iff the identity component is a torus and p does not divide pi_0."""
    _require_prime(p)
    return g.kind == TORUS and g.component_group_order % p != 0


def has_proper_mock_injectives(g: GroupDatum, p: int) -> bool:
    """Negation of linear reductivity: the existence criterion."""
    return not is_linearly_reductive(g, p)


def cyclic_ext_dim(order: int, p: int, i: int) -> int:
    """dim Ext^i(k, k) over the cyclic group of the given order in characteristic p.

    Degree 0 is the invariants, always one dimensional.  In positive
    degrees the minimal resolution over k[x]/(x^{p^a}) is periodic with
    augmentation-trivial differentials, so every dimension is 1 once p
    divides the order and 0 otherwise.
    """
    _require_prime(p)
    if order < 1:
        raise ValueError("group order must be positive")
    if i < 0:
        raise ValueError("cohomological degree must be nonnegative")
    if i == 0:
        return 1
    return 1 if order % p == 0 else 0


def classification(g: GroupDatum, p: int) -> dict:
    """Decision plus a witness narrative, JSON-ready.

    When existence comes from the component group, the witness records the
    first positive Ext dimension of the cyclic group of that order; for
    non-cyclic component groups the number is only an indicator for the
    cyclic case, so it is labeled as such.
    """
    reductive = is_linearly_reductive(g, p)
    witness = None
    if not reductive:
        if g.kind == REDUCTIVE:
            witness = {
                "kind": "identity_component",
                "detail": f"identity component of type {g.root_type} is not a torus",
            }
        else:
            witness = {
                "kind": "component_group",
                "order": g.component_group_order,
                "detail": (
                    f"p = {p} divides the component group order "
                    f"{g.component_group_order}, so the trivial module is not "
                    "injective over the finite fixed-point subgroup"
                ),
                "ext1_dim_if_cyclic": cyclic_ext_dim(g.component_group_order, p, 1),
            }
    return {
        "group": g.to_obj(),
        "p": p,
        "linearly_reductive": reductive,
        "has_proper_mock_injectives": not reductive,
        "witness": witness,
    }
