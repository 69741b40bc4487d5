"""Construction of 3-D constacyclic codes from a divisor grid.

A code over R = F_q[x,y,z]/(x^s - alpha, y^l - beta, z^k - gamma) is specified
by a k x l grid of monic divisors of x^s - alpha: entry (t, j) is paired with
the t-th z-idempotent and the j-th y-idempotent, and the code is the ideal
generated by those k*l products.  This module builds the generator matrix,
the dual code's matrix (for unit constants +-1), decides self-duality from
the divisor grid, and provides the exhaustive sweep machinery.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .gf import FieldSpec
from .idempotents import (
    IdempotentFamily,
    build_constacyclic_idempotents,
    reciprocal_index,
)
from .poly import Poly, factor_binomial
from .ring3d import AXES, RingElement3D, RingParams, unflatten


class SpecValidationError(ValueError):
    """A code spec violates one of the construction hypotheses."""


class UnsupportedConstantsError(ValueError):
    """Operation requires alpha, beta, gamma in {1, -1}.

    For other constants the dual is a constacyclic code over the ring with
    inverted constants and is not an ideal of the same ring; a parity-check
    matrix is still available through linalg.null_space.
    """


@dataclass(frozen=True)
class CodeSpec:
    ring: RingParams
    divisor_grid: tuple[tuple[Poly, ...], ...]   # [t][j], k rows of l entries

    def degree_grid(self) -> list[list[int]]:
        return [[p.degree for p in row] for row in self.divisor_grid]

    def degree_sum(self) -> int:
        return sum(p.degree for row in self.divisor_grid for p in row)


@dataclass(frozen=True)
class BuiltCode:
    """A built code: its spec, the k*l ring generators, and a full-rank
    generator matrix in the canonical z-major layout."""

    spec: CodeSpec
    generators: tuple[RingElement3D, ...]
    generator_matrix: np.ndarray
    dimension: int

    @property
    def ring(self) -> RingParams:
        return self.spec.ring

    @property
    def n(self) -> int:
        return self.ring.n


@lru_cache(maxsize=None)
def _axis_idempotents(field: FieldSpec, length: int, constant: int) -> IdempotentFamily:
    return build_constacyclic_idempotents(length, field.element(constant))


def code_idempotents(ring: RingParams) -> tuple[IdempotentFamily, IdempotentFamily]:
    """(z-family of size k, y-family of size l) for the ring."""
    return (
        _axis_idempotents(ring.field, ring.k, ring.gamma),
        _axis_idempotents(ring.field, ring.l, ring.beta),
    )


def validate_spec(spec: CodeSpec) -> CodeSpec:
    """Check the construction hypotheses and normalize the divisors.

    Confirms the grid shape, that both root-of-unity hypotheses hold (the
    y- and z-moduli must split into distinct linear factors, which also
    forces their degrees to be coprime to the characteristic), and that every
    grid entry exactly divides x^s - alpha.  Divisors are normalized monic
    (units become 1).  The x-side length s is unrestricted: the generator
    and dual constructions do not need x^s - alpha to be squarefree.
    """
    ring = spec.ring
    field = ring.field
    if len(spec.divisor_grid) != ring.k or any(len(row) != ring.l for row in spec.divisor_grid):
        raise SpecValidationError(
            f"divisor grid must be {ring.k} rows of {ring.l} entries, got "
            f"{[len(row) for row in spec.divisor_grid]}"
        )
    code_idempotents(ring)   # raises if a root of unity is missing
    binom = Poly.binomial(field, ring.s, ring.alpha)
    rows = []
    for t, row in enumerate(spec.divisor_grid):
        out_row = []
        for j, p in enumerate(row):
            if p.field != field:
                raise SpecValidationError(f"divisor at cell (t={t}, j={j}) is over the wrong field")
            if p.is_zero():
                raise SpecValidationError(f"divisor at cell (t={t}, j={j}) is zero")
            if not (binom % p).is_zero():
                raise SpecValidationError(
                    f"divisor at cell (t={t}, j={j}) does not divide x^{ring.s} - {ring.alpha} "
                    f"over F_{field.p}: {p!r}"
                )
            out_row.append(p.monic())
        rows.append(tuple(out_row))
    return CodeSpec(ring, tuple(rows))


def _rows_matrix(ring: RingParams, rows: list[np.ndarray]) -> np.ndarray:
    if not rows:
        return np.zeros((0, ring.n), dtype=np.int64)
    return np.vstack(rows)


def build_code(spec: CodeSpec) -> BuiltCode:
    """Generator matrix and dimension of the code defined by the grid.

    For each cell (t, j) with divisor of degree a the matrix gets the rows
    x^i * p(x) * e_j(y) * e_t(z) for i = 0..s-a-1; the rows are linearly
    independent, so the dimension is s*l*k minus the sum of divisor degrees.
    """
    spec = validate_spec(spec)
    ring = spec.ring
    z_fam, y_fam = code_idempotents(ring)
    generators = []
    rows: list[np.ndarray] = []
    for t in range(ring.k):
        for j in range(ring.l):
            p = spec.divisor_grid[t][j]
            zc = z_fam.members[t].coeffs
            yc = y_fam.members[j].coeffs
            generators.append(RingElement3D.from_axis_polys(ring, p.coeffs, yc, zc))
            for i in range(ring.s - p.degree):
                elem = RingElement3D.from_axis_polys(ring, p.shift_up(i).coeffs, yc, zc)
                rows.append(elem.flatten())
    matrix = _rows_matrix(ring, rows)
    dimension = ring.n - spec.degree_sum()
    if matrix.shape[0] != dimension or linalg.rank(matrix, ring.field.p) != dimension:
        raise RuntimeError(
            f"generator rows are not independent: expected rank {dimension}, "
            f"got {linalg.rank(matrix, ring.field.p)}"
        )
    return BuiltCode(spec, tuple(generators), matrix, dimension)


def _require_unit_constants(ring: RingParams, what: str):
    units = {1, ring.field.p - 1}
    if not {ring.alpha, ring.beta, ring.gamma} <= units:
        raise UnsupportedConstantsError(
            f"{what} requires alpha, beta, gamma in {{1, -1}}; the dual of this code "
            f"lives in the ring with constants ({ring.field.p}-adic inverses) "
            f"(alpha^-1, beta^-1, gamma^-1) and is not an ideal of the same ring. "
            f"Use linalg.null_space on the generator matrix for a parity check."
        )


def build_dual(spec: CodeSpec) -> BuiltCode:
    """Generator matrix of the dual code, for constants in {1, -1}.

    Cell (t, j) contributes the rows x^i * q*(x) * e_j*(y) * e_t*(z) for
    i = 0..a-1, where p*q = x^s - alpha, a = deg p, and * is coefficient
    reversal; cells with constant divisor contribute no rows.  The result has
    rank equal to the divisor degree sum and is orthogonal to the code.
    """
    spec = validate_spec(spec)
    ring = spec.ring
    _require_unit_constants(ring, "dual construction")
    z_fam, y_fam = code_idempotents(ring)
    binom = Poly.binomial(ring.field, ring.s, ring.alpha)
    generators = []
    rows: list[np.ndarray] = []
    for t in range(ring.k):
        for j in range(ring.l):
            p = spec.divisor_grid[t][j]
            q_star = (binom // p).reciprocal()
            z_star = z_fam.members[t].reciprocal().coeffs
            y_star = y_fam.members[j].reciprocal().coeffs
            generators.append(RingElement3D.from_axis_polys(ring, q_star.coeffs, y_star, z_star))
            for i in range(p.degree):
                elem = RingElement3D.from_axis_polys(ring, q_star.shift_up(i).coeffs, y_star, z_star)
                rows.append(elem.flatten())
    matrix = _rows_matrix(ring, rows)
    dimension = spec.degree_sum()
    if matrix.shape[0] != dimension or linalg.rank(matrix, ring.field.p) != dimension:
        raise RuntimeError("dual rows are not independent")
    return BuiltCode(spec, tuple(generators), matrix, dimension)


def partner_cell(ring: RingParams, t: int, j: int) -> tuple[int, int]:
    """The cell whose divisor constrains (t, j) in the self-duality test.

    The reversal of the t-th z-idempotent is proportional to the idempotent
    at the reciprocal index (and likewise along y), so cell (t, j) of the
    dual pairs with this cell of the original grid.  The map is an involution.
    """
    _require_unit_constants(ring, "cell pairing")
    t2 = reciprocal_index(ring.k, t, constant_is_one=(ring.gamma == 1))
    j2 = reciprocal_index(ring.l, j, constant_is_one=(ring.beta == 1))
    return t2, j2


def dual_spec(spec: CodeSpec) -> CodeSpec:
    """The dual code expressed as a divisor-grid spec over the same ring.

    Cell (t', j') of the dual grid, with (t', j') the partner of (t, j),
    holds the monic associate of reciprocal((x^s - alpha) / p[t][j]).
    """
    spec = validate_spec(spec)
    ring = spec.ring
    _require_unit_constants(ring, "dual spec")
    binom = Poly.binomial(ring.field, ring.s, ring.alpha)
    grid = [[None] * ring.l for _ in range(ring.k)]
    for t in range(ring.k):
        for j in range(ring.l):
            t2, j2 = partner_cell(ring, t, j)
            grid[t2][j2] = (binom // spec.divisor_grid[t][j]).reciprocal().monic()
    return CodeSpec(ring, tuple(tuple(row) for row in grid))


def quasi_twisted_closure(code: BuiltCode) -> dict[str, bool]:
    """Check closure of the row space under each axis shift.

    For each axis, every generator-matrix row is shifted (block rotation with
    the wrapped block scaled by the axis constant) and tested for membership
    in the row space; an ideal passes on all three axes.
    """
    ring = code.ring
    p = ring.field.p
    report = {}
    for axis in AXES:
        ok = True
        for row in code.generator_matrix:
            shifted = unflatten(ring, row).shift(axis).flatten()
            if not linalg.row_space_contains(code.generator_matrix, shifted, p):
                ok = False
                break
        report[axis] = ok
    return report


def direct_self_dual_check(code: BuiltCode) -> bool:
    """Self-duality straight from the matrix: G*G^T = 0 and dim = n/2."""
    gg = linalg.matmul(code.generator_matrix, code.generator_matrix.T, code.ring.field.p)
    return (not gg.any()) and 2 * code.dimension == code.n


def self_dual_decide(spec: CodeSpec, *, cross_check: bool = True) -> tuple[bool, dict]:
    """Decide self-duality from the divisor grid alone.

    Two conditions: (i) the divisor degrees sum to half the length, and
    (ii) for every cell, with q the complementary divisor (p*q = x^s - alpha)
    and * coefficient reversal, the partner cell's divisor divides q*, and
    the partner's q* divides this cell's p.  The certificate records every
    cell comparison; with cross_check the verdict is recomputed from the
    generator matrix and a mismatch raises.
    """
    spec = validate_spec(spec)
    ring = spec.ring
    _require_unit_constants(ring, "self-duality test")
    binom = Poly.binomial(ring.field, ring.s, ring.alpha)
    total = spec.degree_sum()
    dim_ok = ring.n == 2 * total
    cells = []
    first_failure = None
    for t in range(ring.k):
        for j in range(ring.l):
            t2, j2 = partner_cell(ring, t, j)
            p_cell = spec.divisor_grid[t][j]
            q_star = (binom // p_cell).reciprocal()
            partner_p = spec.divisor_grid[t2][j2]
            partner_q_star = (binom // partner_p).reciprocal()
            ok = partner_p.divides(q_star) and partner_q_star.divides(p_cell)
            cells.append({
                "cell": [t, j],
                "partner": [t2, j2],
                "p": list(p_cell.coeffs),
                "q_reciprocal": list(q_star.coeffs),
                "partner_p": list(partner_p.coeffs),
                "partner_q_reciprocal": list(partner_q_star.coeffs),
                "ok": ok,
            })
            if not ok and first_failure is None:
                first_failure = [t, j]
    verdict = dim_ok and first_failure is None
    certificate = {
        "length": ring.n,
        "divisor_degree_sum": total,
        "dimension_condition_ok": dim_ok,
        "cells": cells,
        "cell_conditions_ok": first_failure is None,
        "first_failure": first_failure,
    }
    if cross_check:
        direct = direct_self_dual_check(build_code(spec))
        certificate["direct_check"] = direct
        if direct != verdict:
            raise RuntimeError(
                f"self-duality criteria disagree with the direct matrix test on {spec!r}"
            )
    return verdict, certificate


def self_dual_feasible(field: FieldSpec, s: int, l: int, k: int,
                       alpha: int, beta: int = 1, gamma: int = 1) -> tuple[bool, str]:
    """Cheap screen: can any (alpha, 1, 1)-code of length s*l*k be self-dual?

    Returns (False, reason) when the exclusion argument applies: with
    beta = gamma = 1 the cell (k-1, l-1) is paired with itself, so its
    divisor p would need reciprocal((x^s - alpha)/p) proportional to p; when
    gcd(s, q) = 1 (and s odd if alpha = -1) the factor x - alpha divides
    exactly one of p and its complement, which contradicts that relation.
    Returns (True, reason) when not excluded by this argument.
    """
    a = field.canon(alpha)
    if a not in (1, field.p - 1):
        raise UnsupportedConstantsError("feasibility screen requires alpha in {1, -1}")
    if (field.canon(beta), field.canon(gamma)) != (1, 1):
        return True, "not screened: the exclusion argument requires beta = gamma = 1"
    if math.gcd(s, field.p) != 1:
        return True, "not excluded: the characteristic divides s"
    if a == field.p - 1 and s % 2 == 0:
        return True, "not excluded: x + 1 does not divide x^s + 1 when s is even"
    return False, (
        "self-dual impossible: the self-paired grid cell would need a divisor p of "
        "x^s - alpha whose complementary divisor reverses onto p itself, but "
        "x - alpha divides exactly one of the pair when gcd(s, q) = 1"
    )


# --- divisor lattice and exhaustive sweeps -------------------------------

def binomial_divisors(field: FieldSpec, s: int, alpha: int) -> tuple[Poly, ...]:
    """All monic divisors of x^s - alpha, sorted by (degree, coefficients)."""
    factored = factor_binomial(field, s, alpha)
    divisors = []
    for exps in itertools.product(*[range(m + 1) for _, m in factored]):
        d = Poly.one(field)
        for (f, _), e in zip(factored, exps):
            for _ in range(e):
                d = d * f
        divisors.append(d)
    divisors.sort(key=lambda f: (f.degree, f.coeffs))
    return tuple(divisors)


def count_divisor_grids(ring: RingParams) -> int:
    return len(binomial_divisors(ring.field, ring.s, ring.alpha)) ** (ring.k * ring.l)


def enumerate_divisor_grids(ring: RingParams):
    """Every divisor-grid spec over the ring, in lexicographic grid order."""
    divisors = binomial_divisors(ring.field, ring.s, ring.alpha)
    cells = ring.k * ring.l
    for combo in itertools.product(divisors, repeat=cells):
        grid = tuple(tuple(combo[t * ring.l + j] for j in range(ring.l)) for t in range(ring.k))
        yield CodeSpec(ring, grid)


def admissible_sign_rings(field: FieldSpec, s: int, l: int, k: int) -> list[RingParams]:
    """Rings with alpha, beta, gamma in {1, -1} whose root hypotheses hold."""
    out = []
    units = (1, field.p - 1)
    for alpha, beta, gamma in itertools.product(units, repeat=3):
        ring = RingParams(field, s, l, k, alpha, beta, gamma)
        try:
            code_idempotents(ring)
        except ValueError:
            continue
        out.append(ring)
    return out


def reciprocal_complement(p_poly: Poly, binom: Poly) -> Poly:
    """monic(reciprocal(binom / p)): the divisor forced on the partner cell."""
    return (binom // p_poly).reciprocal().monic()


def involution_orbits(ring: RingParams) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Orbits of the cell-pairing involution: (cell, partner), partner == cell
    for self-paired cells, each unordered orbit listed once."""
    seen = set()
    orbits = []
    for t in range(ring.k):
        for j in range(ring.l):
            if (t, j) in seen:
                continue
            other = partner_cell(ring, t, j)
            seen.add((t, j))
            seen.add(other)
            orbits.append(((t, j), other))
    return orbits


def self_dual_grid_count(ring: RingParams) -> int:
    """Number of divisor grids over the ring that give a self-dual code.

    The per-cell self-duality conditions couple each cell only with its
    partner, and within an orbit they collapse to: the partner's divisor is
    the monic reversal of this cell's complementary divisor (for a
    self-paired cell, the divisor must equal that reversal itself).  Both
    directions follow because reversal distributes over the factorization
    x^s - alpha = p*q and (x^s - alpha) reversed is a unit multiple of
    itself when alpha is +-1.  The degree condition sum(a) = n/2 is implied:
    paired cells have degrees a and s - a.  Counts therefore multiply over
    orbits: a free choice per paired orbit, a reversal-fixed divisor per
    self-paired orbit.  Cross-validated against grid enumeration in tests.
    """
    _require_unit_constants(ring, "self-dual grid count")
    binom = Poly.binomial(ring.field, ring.s, ring.alpha)
    divisors = binomial_divisors(ring.field, ring.s, ring.alpha)
    total = 1
    for cell, other in involution_orbits(ring):
        if cell == other:
            local = sum(1 for d in divisors if reciprocal_complement(d, binom) == d)
        else:
            local = len(divisors)
        total *= local
    return total


def cyclic_yz_selfdual_scan(field: FieldSpec, s_max: int, l_max: int, k_max: int) -> list[dict]:
    """Exact self-duality existence scan over beta = gamma = 1 rings.

    Covers alpha in {1, -1}, s <= s_max with gcd(s, q) = 1 (s odd when
    alpha = -1), and all l, k admitted by the root hypothesis (divisors of
    q - 1).  Each record carries the exact count of self-dual grids and the
    feasibility screen's verdict.
    """
    records = []
    admissible_lengths = [m for m in range(1, max(l_max, k_max) + 1) if (field.p - 1) % m == 0]
    for alpha in (1, field.p - 1):
        for s in range(1, s_max + 1):
            if math.gcd(s, field.p) != 1:
                continue
            if alpha == field.p - 1 and s % 2 == 0:
                continue
            for l in admissible_lengths:
                if l > l_max:
                    continue
                for k in admissible_lengths:
                    if k > k_max:
                        continue
                    ring = RingParams(field, s, l, k, alpha, 1, 1)
                    feasible, reason = self_dual_feasible(field, s, l, k, alpha)
                    records.append({
                        "q": field.p, "s": s, "l": l, "k": k,
                        "alpha": alpha, "beta": 1, "gamma": 1,
                        "selfdual_grid_count": self_dual_grid_count(ring),
                        "grid_count": count_divisor_grids(ring),
                        "feasible": feasible,
                        "reason": reason,
                    })
    return records


def sign_grid_sweep_report(field: FieldSpec, s: int, l: int, k: int) -> dict:
    """Exhaustive per-grid sweep over all admissible +-1 sign choices.

    For every spec: checks the dimension formula against the matrix rank,
    dual orthogonality and rank complement, row-space equality of the dual
    matrix with the kernel of G, and agreement of the grid-based self-dual
    verdict with the direct matrix test.  Returns aggregate counts.
    """
    p = field.p
    report = {
        "q": p, "s": s, "l": l, "k": k,
        "specs": 0, "self_dual": 0,
        "rank_mismatches": 0, "orthogonality_failures": 0,
        "kernel_mismatches": 0, "verdict_disagreements": 0,
        "rings": [],
    }
    for ring in admissible_sign_rings(field, s, l, k):
        report["rings"].append({"alpha": ring.alpha, "beta": ring.beta, "gamma": ring.gamma})
        for spec in enumerate_divisor_grids(ring):
            report["specs"] += 1
            code = build_code(spec)
            dual = build_dual(spec)
            if code.dimension + dual.dimension != ring.n:
                report["rank_mismatches"] += 1
            gh = linalg.matmul(code.generator_matrix, dual.generator_matrix.T, p)
            if gh.any():
                report["orthogonality_failures"] += 1
            kernel = linalg.null_space(code.generator_matrix, p)
            if not linalg.row_space_equal(dual.generator_matrix, kernel, p):
                report["kernel_mismatches"] += 1
            verdict, _ = self_dual_decide(spec, cross_check=False)
            if verdict != direct_self_dual_check(code):
                report["verdict_disagreements"] += 1
            if verdict:
                report["self_dual"] += 1
    return report
