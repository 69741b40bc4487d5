"""Primitive central idempotents of F_q[z]/(z^k - gamma) and of the full
cyclotomic quotient F_q[z]/(z^(rk) - 1), where r is the order of gamma.

The same constructors serve the y-block: call them with (l, beta) to get the
idempotents of F_q[y]/(y^l - beta).  Construction requires an element omega
of order r*k with omega**k == gamma, hence q = 1 (mod r*k); under that
hypothesis both moduli split into distinct linear factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf import FieldElement, FieldSpec, MissingRootOfUnityError, element_order, find_root
from .poly import Poly

FULL_CYCLE = "full-cycle"          # modulus z^(rk) - 1, rk members
CONSTACYCLIC = "constacyclic"      # modulus z^k - gamma, k members


class RepeatedRootsError(ValueError):
    """The modulus has repeated roots (characteristic divides r*k)."""


@dataclass(frozen=True)
class IdempotentFamily:
    kind: str
    field: FieldSpec
    k: int
    r: int
    constant: int            # gamma, canonical residue
    omega: int               # fixed root: omega**k == gamma, order r*k
    members: tuple[Poly, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def modulus(self) -> Poly:
        if self.kind == FULL_CYCLE:
            return Poly.binomial(self.field, self.r * self.k, 1)
        return Poly.binomial(self.field, self.k, self.constant)

    def eigenvalue(self, t: int) -> int:
        """The root at which members[t] evaluates to 1."""
        if not 0 <= t < self.size:
            raise IndexError(f"index {t} out of range for family of size {self.size}")
        exp = t if self.kind == FULL_CYCLE else 1 + t * self.r
        return self.field.pow(self.omega, exp)


def _root_data(k: int, gamma: FieldElement) -> tuple[FieldSpec, int, int]:
    field = gamma.field
    r = element_order(gamma)
    if (r * k) % field.p == 0:
        raise RepeatedRootsError(
            f"z^{r * k} - 1 has repeated roots over F_{field.p} "
            f"(characteristic divides {r * k})"
        )
    omega = find_root(k, gamma)
    return field, r, omega.value


@lru_cache(maxsize=None)
def build_full_idempotents(k: int, gamma: FieldElement) -> IdempotentFamily:
    """The rk idempotents of F_q[z]/(z^(rk) - 1).

    Member t is the geometric-sum form
    (1/rk) * (1 + w z + (w z)^2 + ... + (w z)^(rk-1)) with w = omega^(rk - t);
    it evaluates to 1 at omega^t and to 0 at every other rk-th root of unity.
    """
    field, r, omega = _root_data(k, gamma)
    rk = r * k
    inv_rk = field.inv(rk % field.p)
    members = []
    for t in range(rk):
        w = field.pow(omega, rk - t)
        coeffs = [inv_rk]
        for _ in range(rk - 1):
            coeffs.append(field.mul(coeffs[-1], w))
        members.append(Poly.from_coeffs(field, coeffs))
    return IdempotentFamily(FULL_CYCLE, field, k, r, gamma.value, omega, tuple(members))


@lru_cache(maxsize=None)
def build_constacyclic_idempotents(k: int, gamma: FieldElement) -> IdempotentFamily:
    """The k idempotents of F_q[z]/(z^k - gamma).

    Member t is the Lagrange interpolant of degree < k that is 1 at
    omega^(1 + t*r) and 0 at the other roots of z^k - gamma.
    """
    field, r, omega = _root_data(k, gamma)
    roots = [field.pow(omega, 1 + t * r) for t in range(k)]
    members = []
    for t in range(k):
        num = Poly.one(field)
        den = 1
        for u in range(k):
            if u == t:
                continue
            num = num * Poly.from_coeffs(field, [-roots[u], 1])
            den = field.mul(den, field.sub(roots[t], roots[u]))
        members.append(num.scale(field.inv(den)))
    return IdempotentFamily(CONSTACYCLIC, field, k, r, gamma.value, omega, tuple(members))


def idempotent_eigenfactor(fam: IdempotentFamily, t: int, power: int) -> FieldElement:
    """Scalar replacing multiplication by z**power on members[t].

    In the quotient ring, z * members[t] = eigenvalue(t) * members[t], so a
    power of z acts as the corresponding power of the eigenvalue.
    """
    return FieldElement(fam.field.pow(fam.eigenvalue(t), power), fam.field)


def reciprocal_index(k: int, t: int, *, constant_is_one: bool) -> int:
    """Index of the idempotent proportional to the coefficient reversal of
    member t, for constant +1 or -1.

    For constant 1 the map is (k-2-t) mod k: index k-1 (the idempotent at the
    root 1) is self-paired, the rest pair across it.  For constant -1 the map
    is k-1-t.
    """
    if not 0 <= t < k:
        raise IndexError(f"index {t} out of range for family of size {k}")
    if constant_is_one:
        return (k - 2 - t) % k
    return k - 1 - t


def reciprocal_index_for_constant(field: FieldSpec, constant: int, k: int, t: int) -> int:
    """reciprocal_index keyed by the constant's residue; only +1/-1 supported."""
    c = field.canon(constant)
    if c == 1:
        return reciprocal_index(k, t, constant_is_one=True)
    if c == field.p - 1:
        return reciprocal_index(k, t, constant_is_one=False)
    raise ValueError(f"reciprocal index map is defined only for constants 1 and -1, got {c}")


def identity_report(fam: IdempotentFamily) -> dict[str, bool]:
    """Self-check of the defining identities; used by the verify command.

    Checks completeness (members sum to 1 mod the modulus), pairwise
    orthogonality, the delta evaluations at the roots, and the eigenvalue
    identity z*e_t = eigenvalue(t)*e_t mod the modulus.
    """
    field = fam.field
    modulus = fam.modulus()
    one = Poly.one(field)
    total = Poly.zero(field)
    for m in fam.members:
        total = total + m
    report = {"completeness": (total % modulus) == one}

    ortho = True
    for t, a in enumerate(fam.members):
        for u, b in enumerate(fam.members):
            prod = (a * b) % modulus
            want = a if t == u else Poly.zero(field)
            ortho &= prod == want
    report["orthogonality"] = ortho

    deltas = True
    for t, m in enumerate(fam.members):
        for u in range(fam.size):
            deltas &= m.evaluate(fam.eigenvalue(u)) == (1 if t == u else 0)
    report["root_evaluations"] = deltas

    eigen = True
    z = Poly.x_power(field, 1)
    for t, m in enumerate(fam.members):
        eigen &= ((z * m) % modulus) == m.scale(fam.eigenvalue(t))
    report["shift_eigenvalue"] = eigen
    return report
