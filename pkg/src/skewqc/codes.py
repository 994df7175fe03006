"""1-generator skew quasi-cyclic codes of index l.

A code lives in R^l with R = F[x; theta]/(x^s - 1) (m must divide s so the
modulus is central).  Codewords are laid out *blockwise*: coordinates
[b*s + j] for block b hold the coefficient of x^j in the b-th component.
The defining symmetry is the skew shift T: rotate every block right by one
position and apply theta to all coordinates — exactly left-multiplication
by x on each component.

From a generating tuple (f_1, ..., f_l) the code is the left R-submodule
{ u * (f_1, ..., f_l) : u in R }.  Its F-dimension k, generator polynomial
g = gcld(f_1, ..., f_l, x^s - 1) and parity polynomial h with
g*h = h*g = x^s - 1 satisfy k = s - deg g = deg h; the constructor checks
this identity and raises ConsistencyError when the row-space rank disagrees.

Alternatively, a code may be built from an explicit right factor g of
x^s - 1 (CodeStructure(spec, generator=g)): the spanning matrix then takes
exactly k = s - deg g shift images of the tuple.  Those rows are always
independent, so the dimension is k by construction.  When the tuple is
closed under the shift this is the same code as the full module span
(module_closed is True); otherwise the span is a proper k-dimensional
subspace of the module closure, which some published generator matrices
turn out to be.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .errors import ConsistencyError
from .field import FieldSpec
from .skewpoly import SkewPoly, gcld_many, left_divmod, right_divmod, x_pow_minus_one


@dataclass(frozen=True)
class CodeSpec:
    """Defining data of a skew quasi-cyclic code: ring parameters and the
    generating tuple (components are reduced mod x^s - 1 on construction)."""

    field: FieldSpec
    s: int
    generators: Tuple[SkewPoly, ...]

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("s must be positive")
        if self.s % self.field.m != 0:
            raise ValueError(
                f"x^{self.s} - 1 is not central: {self.field.m} does not divide {self.s}"
            )
        if not self.generators:
            raise ValueError("generating tuple must have at least one component")
        modulus = x_pow_minus_one(self.field, self.s)
        reduced = []
        for f in self.generators:
            if f.field != self.field:
                raise ValueError("generator over the wrong field")
            reduced.append(right_divmod(f, modulus)[1])
        object.__setattr__(self, "generators", tuple(reduced))

    @property
    def l(self) -> int:
        return len(self.generators)

    @property
    def n(self) -> int:
        return self.s * self.l


def skew_shift(field: FieldSpec, s: int, vec: Sequence[int]) -> List[int]:
    """Apply T: per-block right rotation by one followed by theta."""
    if len(vec) % s:
        raise ValueError("vector length is not a multiple of s")
    theta = field.theta_pows[1 % field.m]
    out = []
    for b in range(0, len(vec), s):
        block = vec[b : b + s]
        out.extend(theta[block[-1 + j]] for j in range(s))
    return out


def interleave_permutation(s: int, l: int) -> List[int]:
    """perm with interleaved[i] = block_layout[perm[i]].

    Block layout groups the l components contiguously; the interleaved view
    lists coordinate j of every block before coordinate j+1 of any.
    """
    return [b * s + j for j in range(s) for b in range(l)]


def blocks_to_polys(spec: CodeSpec, vec: Sequence[int]) -> List[SkewPoly]:
    """Read a block-layout vector back as its l component polynomials."""
    s = spec.s
    if len(vec) != spec.n:
        raise ValueError("vector length mismatch")
    return [SkewPoly(spec.field, vec[b * s : (b + 1) * s]) for b in range(spec.l)]


def polys_to_blocks(spec: CodeSpec, polys: Sequence[SkewPoly]) -> List[int]:
    out = []
    for f in polys:
        if f.degree >= spec.s:
            raise ValueError("component degree exceeds s - 1")
        out.extend(f.coeff(j) for j in range(spec.s))
    return out


class CodeStructure:
    """A fully built code: generator/parity polynomials plus an RREF basis."""

    def __init__(self, spec: CodeSpec, generator: Optional[SkewPoly] = None):
        self.spec = spec
        F = spec.field
        s, l = spec.s, spec.l
        modulus = x_pow_minus_one(F, s)
        if generator is None:
            self.g = gcld_many(list(spec.generators) + [modulus])
        else:
            if generator.field != F:
                raise ValueError("generator over the wrong field")
            if generator.is_zero or generator.degree >= s:
                raise ValueError("generator must be nonzero of degree < s")
            self.g = generator.monic_left()
        h, r = left_divmod(modulus, self.g)
        if not r.is_zero:
            raise ConsistencyError("generator polynomial does not divide x^s - 1")
        if h * self.g != modulus:
            raise ConsistencyError("parity polynomial fails h*g = x^s - 1")
        self.h = h
        self.k = s - self.g.degree
        self.n = spec.n

        # span: rows T^i(generating tuple), then row reduce.  The module
        # span uses all s shift images; the explicit-generator span only the
        # first k (always independent when g right-divides x^s - 1).
        row = polys_to_blocks(spec, spec.generators)
        rows = []
        for _ in range(s):
            rows.append(row)
            row = skew_shift(F, s, row)
        full_rank = linalg.rank(F, rows)
        if generator is None:
            if full_rank != self.k:
                raise ConsistencyError(
                    f"row-space rank {full_rank} != s - deg g = {self.k}"
                )
            self.module_closed = True
            reduced, pivots = linalg.rref(F, rows)
        else:
            self.module_closed = full_rank == self.k
            reduced, pivots = linalg.rref(F, rows[: self.k])
            if len(pivots) != self.k:
                raise ConsistencyError(
                    f"first {self.k} shift images have rank {len(pivots)}"
                )
        self.pivots = pivots
        self.genmatrix = np.array(
            [reduced[i] for i in range(self.k)], dtype=np.uint8
        ).reshape(self.k, self.n)

    # -- coding operations ------------------------------------------------

    def encode(self, message: Sequence[int]) -> np.ndarray:
        """Map a length-k message to its codeword (block layout)."""
        if len(message) != self.k:
            raise ValueError(f"message length must be {self.k}")
        F = self.spec.field
        acc = np.zeros(self.n, dtype=np.uint8)
        for c, grow in zip(message, self.genmatrix):
            if c:
                acc = F.np_add[acc, F.np_mul[c][grow]]
        return acc

    def is_codeword(self, vec: Sequence[int]) -> bool:
        """Membership test by reduction against the RREF basis."""
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        F = self.spec.field
        v = np.asarray(vec, dtype=np.uint8).copy()
        for i, pc in enumerate(self.pivots):
            c = v[pc]
            if c:
                v = F.np_sub[v, F.np_mul[c][self.genmatrix[i]]]
        return not v.any()

    def poly_is_codeword(self, polys: Sequence[SkewPoly]) -> bool:
        return self.is_codeword(polys_to_blocks(self.spec, list(polys)))

    def codeword_from_poly(self, u: SkewPoly) -> np.ndarray:
        """Codeword u * (f_1, ..., f_l) reduced mod x^s - 1."""
        modulus = x_pow_minus_one(self.spec.field, self.spec.s)
        comps = [right_divmod(u * f, modulus)[1] for f in self.spec.generators]
        return np.asarray(polys_to_blocks(self.spec, comps), dtype=np.uint8)

    def params(self, d: Optional[int] = None) -> str:
        return f"[{self.n},{self.k}]" if d is None else f"[{self.n},{self.k},{d}]"


def build_code(
    field: FieldSpec, s: int, generators: Sequence[SkewPoly]
) -> CodeStructure:
    """Convenience wrapper: CodeSpec + CodeStructure in one call."""
    return CodeStructure(CodeSpec(field, s, tuple(generators)))


def degenerate_tuple(
    g: SkewPoly, multipliers: Sequence[SkewPoly], s: int
) -> Tuple[SkewPoly, ...]:
    """The tuple (g, f_1*g, ..., f_{l-1}*g) used by the degenerate family."""
    F = g.field
    modulus = x_pow_minus_one(F, s)
    out = [right_divmod(g, modulus)[1]]
    for f in multipliers:
        out.append(right_divmod(f * g, modulus)[1])
    return tuple(out)


def build_degenerate_code(
    field: FieldSpec, s: int, g: SkewPoly, multipliers: Sequence[SkewPoly]
) -> CodeStructure:
    """Code spanned by k = s - deg g shift images of (g, f_1*g, ...).

    g must be a right factor of x^s - 1.  Identical to the module span
    whenever the tuple is shift-closed (module_closed on the result tells).
    """
    spec = CodeSpec(field, s, degenerate_tuple(g, multipliers, s))
    return CodeStructure(spec, generator=g)
