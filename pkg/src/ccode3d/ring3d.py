"""Elements of R = F_q[x,y,z]/(x^s - alpha, y^l - beta, z^k - gamma).

An element is a dense s*l*k coefficient tensor c[i, j, t] for the monomial
x^i y^j z^t.  The canonical codeword layout concatenates the z-slices:

    position(i, j, t) = t*(s*l) + j*s + i

so a flattened word reads (z^0 block | z^1 block | ... | z^(k-1) block), each
block listing the y^j runs of x-coefficients, low powers first.  Two
alternative layouts (x-major and y-major) are exposed for the quasi-twisted
closure checks; all three are permutations of each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldMismatchError, FieldSpec

AXES = ("x", "y", "z")


@dataclass(frozen=True)
class RingParams:
    field: FieldSpec
    s: int
    l: int
    k: int
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if min(self.s, self.l, self.k) < 1:
            raise ValueError("block lengths s, l, k must all be >= 1")
        for name in ("alpha", "beta", "gamma"):
            v = self.field.canon(getattr(self, name))
            if v == 0:
                raise ValueError(f"{name} must be nonzero")
            object.__setattr__(self, name, v)

    @property
    def n(self) -> int:
        return self.s * self.l * self.k

    def shape(self) -> tuple[int, int, int]:
        return (self.s, self.l, self.k)

    def wrap_constant(self, axis: str) -> int:
        return {"x": self.alpha, "y": self.beta, "z": self.gamma}[axis]

    def inverse_constants(self) -> "RingParams":
        f = self.field
        return RingParams(f, self.s, self.l, self.k,
                          f.inv(self.alpha), f.inv(self.beta), f.inv(self.gamma))


def _as_tensor(params: RingParams, data) -> np.ndarray:
    arr = np.asarray(data, dtype=np.int64) % params.field.p
    if arr.shape != params.shape():
        raise ValueError(f"expected tensor of shape {params.shape()}, got {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class RingElement3D:
    params: RingParams
    coeffs: np.ndarray   # shape (s, l, k), canonical residues, read-only

    @staticmethod
    def from_tensor(params: RingParams, data) -> "RingElement3D":
        return RingElement3D(params, _as_tensor(params, data))

    @staticmethod
    def zero(params: RingParams) -> "RingElement3D":
        return RingElement3D.from_tensor(params, np.zeros(params.shape(), dtype=np.int64))

    @staticmethod
    def one(params: RingParams) -> "RingElement3D":
        return RingElement3D.monomial(params, 0, 0, 0)

    @staticmethod
    def monomial(params: RingParams, i: int, j: int, t: int, scale: int = 1) -> "RingElement3D":
        f = params.field
        for steps, m, const in ((i, params.s, params.alpha),
                                (j, params.l, params.beta),
                                (t, params.k, params.gamma)):
            scale = f.mul(scale, f.pow(const, steps // m))
        arr = np.zeros(params.shape(), dtype=np.int64)
        arr[i % params.s, j % params.l, t % params.k] = f.canon(scale)
        return RingElement3D.from_tensor(params, arr)

    @staticmethod
    def from_axis_polys(params: RingParams, fx, gy, hz) -> "RingElement3D":
        """Product f(x)*g(y)*h(z) from ascending coefficient sequences.

        Each factor is reduced modulo its axis relation first (coefficient i
        folds onto i mod m with a wrap-constant power), so inputs of any
        degree are accepted.
        """
        xv = _reduce_axis(params.field, fx, params.s, params.alpha)
        yv = _reduce_axis(params.field, gy, params.l, params.beta)
        zv = _reduce_axis(params.field, hz, params.k, params.gamma)
        tensor = np.einsum("i,j,t->ijt", xv, yv, zv) % params.field.p
        return RingElement3D.from_tensor(params, tensor)

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def _check(self, other: "RingElement3D"):
        if self.params != other.params:
            raise FieldMismatchError("ring parameters differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement3D):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.coeffs, other.coeffs)

    def __add__(self, other: "RingElement3D") -> "RingElement3D":
        self._check(other)
        return RingElement3D.from_tensor(self.params, self.coeffs + other.coeffs)

    def __sub__(self, other: "RingElement3D") -> "RingElement3D":
        self._check(other)
        return RingElement3D.from_tensor(self.params, self.coeffs - other.coeffs)

    def scale(self, c: int) -> "RingElement3D":
        return RingElement3D.from_tensor(self.params, self.coeffs * self.params.field.canon(c))

    def __mul__(self, other: "RingElement3D") -> "RingElement3D":
        """Ring product: 3-D convolution where an index overflow along x, y, z
        contributes a factor alpha, beta, gamma per full wrap."""
        self._check(other)
        p = self.params.field.p
        out = np.zeros(self.params.shape(), dtype=np.int64)
        for (i, j, t) in np.argwhere(self.coeffs):
            c = int(self.coeffs[i, j, t])
            out = (out + c * _monomial_shift(other.coeffs, self.params, int(i), int(j), int(t))) % p
        return RingElement3D.from_tensor(self.params, out)

    def shift(self, axis: str) -> "RingElement3D":
        """Constacyclic shift along one axis; equals multiplication by that
        variable, rotating blocks with the wrapped block scaled by the axis
        constant."""
        steps = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}[axis]
        return RingElement3D.from_tensor(
            self.params, _monomial_shift(self.coeffs, self.params, *steps)
        )

    def monomial_times(self, i: int, j: int, t: int) -> "RingElement3D":
        return RingElement3D.from_tensor(
            self.params, _monomial_shift(self.coeffs, self.params, i, j, t)
        )

    def flatten(self) -> np.ndarray:
        """Canonical z-major codeword layout (see module docstring)."""
        vec = np.transpose(self.coeffs, (2, 1, 0)).reshape(-1).copy()
        vec.setflags(write=False)
        return vec

    def flatten_x_major(self) -> np.ndarray:
        """position(i,j,t) = i*(l*k) + t*l + j."""
        return np.transpose(self.coeffs, (0, 2, 1)).reshape(-1)

    def flatten_y_major(self) -> np.ndarray:
        """position(i,j,t) = j*(s*k) + i*k + t."""
        return np.transpose(self.coeffs, (1, 0, 2)).reshape(-1)

    def star(self) -> np.ndarray:
        """Full reversal of the flattened word (block order in t, then j,
        then within-block x-coefficients), used by the orthogonality test."""
        return self.flatten()[::-1].copy()

    def __repr__(self) -> str:
        return f"RingElement3D({self.params.s}x{self.params.l}x{self.params.k} over F_{self.params.field.p})"


def unflatten(params: RingParams, vec) -> RingElement3D:
    arr = np.asarray(vec, dtype=np.int64)
    if arr.shape != (params.n,):
        raise ValueError(f"expected vector of length {params.n}, got shape {arr.shape}")
    tensor = np.transpose(arr.reshape(params.k, params.l, params.s), (2, 1, 0))
    return RingElement3D.from_tensor(params, tensor)


def _reduce_axis(field: FieldSpec, coeffs, m: int, constant: int) -> np.ndarray:
    out = np.zeros(m, dtype=np.int64)
    for i, c in enumerate(coeffs):
        out[i % m] = (out[i % m] + c * field.pow(constant, i // m)) % field.p
    return out


def _monomial_shift(tensor: np.ndarray, params: RingParams, i: int, j: int, t: int) -> np.ndarray:
    """Multiply the coefficient tensor by x^i y^j z^t.

    Each full wrap of an axis multiplies by that axis constant; the residual
    rotation scales only the wrapped leading slices.
    """
    p = params.field.p
    out = tensor
    for axis, steps, const in ((0, i, params.alpha), (1, j, params.beta), (2, t, params.gamma)):
        wraps, steps = divmod(steps, (params.s, params.l, params.k)[axis])
        if wraps:
            out = (out * pow(const, wraps, p)) % p
        if steps == 0:
            continue
        out = np.roll(out, steps, axis=axis)
        sl = [slice(None)] * 3
        sl[axis] = slice(0, steps)
        out[tuple(sl)] = (out[tuple(sl)] * const) % p
    return out % p


def shift_orbit_orthogonal(f: RingElement3D, g: RingElement3D) -> bool:
    """True iff flatten(f) is orthogonal to the reversal of flatten(g) and to
    all of its constacyclic shifts taken with the inverted constants."""
    f._check(g)
    p = f.params.field.p
    a = f.flatten()
    inv = f.params.inverse_constants()
    b = unflatten(inv, g.star())
    for i in range(inv.s):
        for j in range(inv.l):
            for t in range(inv.k):
                shifted = b.monomial_times(i, j, t).flatten()
                if int(a @ shifted) % p != 0:
                    return False
    return True


def annihilator_orthogonality_equiv(f: RingElement3D, g: RingElement3D) -> tuple[bool, bool]:
    """(product-is-zero, shift-orbit-orthogonal): the two flags agree.

    The first flag tests f*g == 0 in the ring; the second tests the flattened
    form of f against the reversed word of g and its full shift orbit under
    the inverse constants.  Their equality is the bridge between the ring
    annihilator and Euclidean duality.
    """
    f._check(g)
    return ((f * g).is_zero(), shift_orbit_orthogonal(f, g))
