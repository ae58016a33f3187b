"""Exact arithmetic for cyclic groups and a twisted family of order 2^(k+1)*p.

The twisted family is generated by a rotation r of order 2^k*p and an
involution s that conjugates r to r^theta, where theta = 2^(k-1)*p - 1.
Because theta^2 = 1 (mod 2^k*p), every product normalizes to a unique
word s^a r^b with a in {0,1} and 0 <= b < 2^k*p, and that pair (a, b)
is the canonical element representation used throughout the package.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

__all__ = [
    "Cyclic",
    "SemidihedralType",
    "GroupSpec",
    "GroupElement",
    "ClassPartition",
    "PresentationCheck",
    "PresentationReport",
    "is_odd_prime",
    "validate_parameters",
    "identity",
    "elements",
    "multiply",
    "inverse",
    "power",
    "element_order",
    "cyclic_subgroup",
    "class_partition",
    "validate_presentation",
]

# Deterministic Miller-Rabin witness set, valid for everything below 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_odd_prime(p: int) -> bool:
    return p % 2 == 1 and _is_prime(p)


def validate_parameters(k: int, p: int) -> None:
    """Reject (k, p) outside the family: k >= 2 integer, p an odd prime."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    if not isinstance(p, int) or isinstance(p, bool) or not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")


@dataclass(frozen=True, order=True)
class GroupElement:
    """Canonical form s^a r^b; cyclic groups use a = 0 throughout."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"s^{self.a} r^{self.b}"


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"cyclic group order must be a positive integer, got {self.n!r}")

    @property
    def order(self) -> int:
        return self.n

    @property
    def rotation_order(self) -> int:
        return self.n

    @property
    def twist(self) -> int:
        return 1


@dataclass(frozen=True)
class SemidihedralType:
    k: int
    p: int

    def __post_init__(self) -> None:
        validate_parameters(self.k, self.p)

    @property
    def rotation_order(self) -> int:
        return 2**self.k * self.p

    @property
    def order(self) -> int:
        return 2 ** (self.k + 1) * self.p

    @property
    def twist(self) -> int:
        return 2 ** (self.k - 1) * self.p - 1

    @property
    def central_rotation(self) -> "GroupElement":
        # r^(2^(k-1)p), the unique involution inside the rotation subgroup
        return GroupElement(0, 2 ** (self.k - 1) * self.p)


GroupSpec = Union[Cyclic, SemidihedralType]


def identity(spec: GroupSpec) -> GroupElement:
    return GroupElement(0, 0)


def elements(spec: GroupSpec) -> list[GroupElement]:
    """All elements, rotations first, each side in ascending exponent order."""
    q = spec.rotation_order
    out = [GroupElement(0, b) for b in range(q)]
    if isinstance(spec, SemidihedralType):
        out.extend(GroupElement(1, b) for b in range(q))
    return out


def _require_canonical(spec: GroupSpec, x: GroupElement) -> None:
    a_max = 1 if isinstance(spec, SemidihedralType) else 0
    if not (0 <= x.a <= a_max and 0 <= x.b < spec.rotation_order):
        raise ValueError(f"element {x} is not canonical for {spec}")


def multiply(spec: GroupSpec, x: GroupElement, y: GroupElement) -> GroupElement:
    """Product x*y in canonical form.

    Moving r^b across s twists the exponent by theta, which gives the
    closed form (s^a r^b)(s^c r^d) = s^(a xor c) r^(theta^c * b + d).
    """
    _require_canonical(spec, x)
    _require_canonical(spec, y)
    q = spec.rotation_order
    b = x.b if y.a == 0 else x.b * spec.twist
    return GroupElement(x.a ^ y.a, (b + y.b) % q)


def inverse(spec: GroupSpec, x: GroupElement) -> GroupElement:
    _require_canonical(spec, x)
    q = spec.rotation_order
    b = -x.b if x.a == 0 else -x.b * spec.twist
    return GroupElement(x.a, b % q)


def power(spec: GroupSpec, x: GroupElement, m: int) -> GroupElement:
    """x^m by binary exponentiation; negative m goes through the inverse."""
    if m < 0:
        return power(spec, inverse(spec, x), -m)
    acc = identity(spec)
    base = x
    while m:
        if m & 1:
            acc = multiply(spec, acc, base)
        base = multiply(spec, base, base)
        m >>= 1
    return acc


def element_order(spec: GroupSpec, x: GroupElement) -> int:
    _require_canonical(spec, x)
    e = identity(spec)
    y = x
    m = 1
    while y != e:
        y = multiply(spec, y, x)
        m += 1
    return m


def cyclic_subgroup(spec: GroupSpec, x: GroupElement) -> tuple[GroupElement, ...]:
    """Powers of x in generation order, starting from the identity."""
    e = identity(spec)
    out = [e]
    y = x
    while y != e:
        out.append(y)
        y = multiply(spec, y, x)
    return tuple(out)


@dataclass(frozen=True)
class ClassPartition:
    """The four structural classes of the twisted group.

    core: identity and the central rotation u = r^(2^(k-1)p).
    rotations: the remaining powers of r.
    order2_flips: s r^b with b even, involutions attached to the identity only.
    order4_flips: s r^b with b odd, elements of order 4 whose square is u.
    """

    core: frozenset[GroupElement]
    rotations: frozenset[GroupElement]
    order2_flips: frozenset[GroupElement]
    order4_flips: frozenset[GroupElement]

    @property
    def total(self) -> int:
        return (
            len(self.core)
            + len(self.rotations)
            + len(self.order2_flips)
            + len(self.order4_flips)
        )


def class_partition(spec: SemidihedralType) -> ClassPartition:
    if not isinstance(spec, SemidihedralType):
        raise ValueError("class partition is defined for the twisted family only")
    q = spec.rotation_order
    u = spec.central_rotation
    e = identity(spec)
    part = ClassPartition(
        core=frozenset({e, u}),
        rotations=frozenset(GroupElement(0, b) for b in range(1, q) if b != u.b),
        order2_flips=frozenset(GroupElement(1, b) for b in range(0, q, 2)),
        order4_flips=frozenset(GroupElement(1, b) for b in range(1, q, 2)),
    )
    if part.total != spec.order:
        raise AssertionError("partition does not cover the group")
    return part


@dataclass(frozen=True)
class PresentationCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class PresentationReport:
    group_order: int
    items: tuple[PresentationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)


def validate_presentation(spec: SemidihedralType, sample_triples: int = 200) -> PresentationReport:
    """Check the defining relations and a sampled slice of associativity."""
    if not isinstance(spec, SemidihedralType):
        raise ValueError("presentation checks apply to the twisted family only")
    q = spec.rotation_order
    theta = spec.twist
    e = identity(spec)
    s = GroupElement(1, 0)
    r = GroupElement(0, 1)

    items = []
    items.append(
        PresentationCheck("rotation_order", power(spec, r, q) == e and element_order(spec, r) == q)
    )
    items.append(PresentationCheck("involution", multiply(spec, s, s) == e))
    conj = multiply(spec, multiply(spec, s, r), inverse(spec, s))
    items.append(
        PresentationCheck(
            "conjugation_twist", conj == GroupElement(0, theta % q), f"s r s^-1 = {conj}"
        )
    )
    items.append(PresentationCheck("twist_involutive", (theta * theta - 1) % q == 0))

    elems = elements(spec)
    items.append(
        PresentationCheck("group_order", len(set(elems)) == spec.order, f"{len(elems)} elements")
    )

    rng = random.Random(spec.order)
    ok = True
    for _ in range(sample_triples):
        x, y, z = (rng.choice(elems) for _ in range(3))
        lhs = multiply(spec, multiply(spec, x, y), z)
        rhs = multiply(spec, x, multiply(spec, y, z))
        if lhs != rhs:
            ok = False
            break
    items.append(PresentationCheck("associativity_sample", ok, f"{sample_triples} triples"))

    return PresentationReport(group_order=spec.order, items=tuple(items))
