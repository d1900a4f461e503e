"""New algebras from old: tensor products and towers of algebras.

A tower is an algebra F1 over a field (or algebra) F2 which is itself an
algebra over F3.  Flat F3-coordinates of F1 are indexed by pairs ``(j, i)``
where ``j`` runs over the F2-over-F3 basis and ``i`` over the F1-over-F2
basis; the pair is flattened as ``j * inner_dim + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .algebra import AlgebraError, AlgebraTable, make_algebra, multiply, structure_checks
from .linalg import SquareMatrix
from .rationals import as_rational


@dataclass(frozen=True)
class IndexPairing:
    outer_dim: int
    inner_dim: int

    @property
    def dim(self) -> int:
        return self.outer_dim * self.inner_dim

    def flatten(self, j: int, i: int) -> int:
        if not (0 <= j < self.outer_dim and 0 <= i < self.inner_dim):
            raise IndexError(f"pair {(j, i)} out of range for {self.outer_dim}×{self.inner_dim}")
        return j * self.inner_dim + i

    def split(self, index: int) -> tuple[int, int]:
        if not 0 <= index < self.dim:
            raise IndexError(f"flat index {index} out of range for dimension {self.dim}")
        return divmod(index, self.inner_dim)


def _tensor_labels(outer: AlgebraTable, inner: AlgebraTable) -> list[str]:
    return [f"{a}⊗{b}" for a in outer.labels for b in inner.labels]


def _product_name(outer: AlgebraTable, inner: AlgebraTable) -> str:
    def wrap(A):
        name = A.name or f"A{A.dim}"
        return f"({name})" if "⊗" in name else name
    return f"{wrap(outer)}⊗{wrap(inner)}"


def tensor_product(outer: AlgebraTable, inner: AlgebraTable) -> AlgebraTable:
    """Componentwise product: C[(d,b)][(j,i)][(m,k)] = outer[d][j][m] · inner[b][i][k]."""
    pairing = IndexPairing(outer.dim, inner.dim)
    entries = []
    for d, j, m, u in outer.nonzero_constants:
        for b, i, k, v in inner.nonzero_constants:
            entries.append((pairing.flatten(d, b), pairing.flatten(j, i), pairing.flatten(m, k), u * v))
    entries.sort()
    return make_algebra(pairing.dim, entries, _tensor_labels(outer, inner), name=_product_name(outer, inner))


# --------------------------------------------------------------------------
# towers
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TowerSpec:
    """F1 over F2 with F2-valued constants, expanded in the F2-over-F3 basis.

    ``inner_expanded[b][c][i][k]`` is the e_c-coordinate (in F2 over F3) of the
    F2-valued coefficient of fiber basis vector b in (fiber i)·(fiber k).
    """

    outer: AlgebraTable
    inner_expanded: tuple[tuple[tuple[tuple[Fraction, ...], ...], ...], ...]
    inner_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        m = len(self.inner_expanded)
        if m == 0:
            raise AlgebraError("tower fiber dimension must be positive")
        for block in self.inner_expanded:
            if len(block) != self.outer.dim:
                raise AlgebraError(
                    f"expanded constants need {self.outer.dim} outer coordinates, got {len(block)}")
            for mat in block:
                if len(mat) != m or any(len(row) != m for row in mat):
                    raise AlgebraError(f"expanded constants must be {m}×{m} in the fiber indices")

    @property
    def inner_dim(self) -> int:
        return len(self.inner_expanded)

    @property
    def pairing(self) -> IndexPairing:
        return IndexPairing(self.outer.dim, self.inner_dim)

    @classmethod
    def from_field_valued(cls, outer: AlgebraTable, inner_dim: int,
                          constants: Mapping[tuple[int, int, int], Sequence],
                          inner_labels: Sequence[str] | None = None) -> "TowerSpec":
        """From ``{(b, i, k): outer-coordinates of C^b_{ik}}``; omitted entries are zero."""
        n = outer.dim
        table = [[[[Fraction(0)] * inner_dim for _ in range(inner_dim)] for _ in range(n)] for _ in range(inner_dim)]
        for (b, i, k), coords in constants.items():
            if not all(0 <= t < inner_dim for t in (b, i, k)):
                raise AlgebraError(f"fiber index out of range in {(b, i, k)}")
            if len(coords) != n:
                raise AlgebraError(f"constant {(b, i, k)} needs {n} outer coordinates, got {len(coords)}")
            for c, v in enumerate(coords):
                table[b][c][i][k] = as_rational(v)
        frozen = tuple(tuple(tuple(tuple(r) for r in mat) for mat in blk) for blk in table)
        return cls(outer, frozen, tuple(inner_labels) if inner_labels else None)

    @classmethod
    def scalar(cls, outer: AlgebraTable, inner: AlgebraTable) -> "TowerSpec":
        """Tower whose fiber constants all lie in the base field (outer coordinate 0)."""
        consts = {}
        for b, i, k, v in inner.nonzero_constants:
            consts[(b, i, k)] = [v] + [0] * (outer.dim - 1)
        return cls.from_field_valued(outer, inner.dim, consts, inner.labels)


def tower_compose(spec: TowerSpec) -> AlgebraTable:
    """F3-constants of F1: C[(d,b)][(j,i)][(m,k)] = Σ_{a,c} C23[a][j][m] C23[d][a][c] C12[b][c][i][k]."""
    outer = spec.outer
    if not outer.unital:
        raise AlgebraError("tower composition needs a unital outer algebra (e_0 is the fiber unit)")
    pairing = spec.pairing
    m_dim, n = spec.inner_dim, outer.dim
    expanded = []
    for b, c in product(range(m_dim), range(n)):
        mat = spec.inner_expanded[b][c]
        for i, k in product(range(m_dim), repeat=2):
            if mat[i][k]:
                expanded.append((b, c, i, k, mat[i][k]))
    acc: dict[tuple[int, int, int], Fraction] = {}
    for j, mm in product(range(n), repeat=2):
        for a, u in outer.basis_product(j, mm):
            for b, c, i, k, w in expanded:
                for d, v in outer.basis_product(a, c):
                    key = (pairing.flatten(d, b), pairing.flatten(j, i), pairing.flatten(mm, k))
                    acc[key] = acc.get(key, 0) + u * v * w
    entries = sorted((k, i, j, v) for (k, i, j), v in acc.items() if v)
    inner_labels = spec.inner_labels or tuple(f"f{i}" for i in range(m_dim))
    labels = [f"{a}·{b}" for a in outer.labels for b in inner_labels]
    return make_algebra(pairing.dim, entries, labels)


def fiber_unit_products(spec: TowerSpec) -> tuple[dict, dict]:
    """Products of fiber basis vectors computed two ways.

    First from the composed F3 constants (the product of flat vectors
    (0, i) and (0, k)), then directly as C^b_{ik} e_b expanded over F3.
    Both are returned as ``{(i, k): {flat index: coefficient}}``.
    """
    composed = tower_compose(spec)
    pairing = spec.pairing
    via_constants, direct = {}, {}
    for i, k in product(range(spec.inner_dim), repeat=2):
        via_constants[(i, k)] = dict(composed.basis_product(pairing.flatten(0, i), pairing.flatten(0, k)))
        expansion: dict[int, Fraction] = {}
        for b, d in product(range(spec.inner_dim), range(spec.outer.dim)):
            w = spec.inner_expanded[b][d][i][k]
            if not w:
                continue
            # e_0 · (C^{bd} e_d), then attach fiber b
            for c, v in spec.outer.basis_product(0, d):
                idx = pairing.flatten(c, b)
                expansion[idx] = expansion.get(idx, 0) + w * v
        direct[(i, k)] = {idx: v for idx, v in sorted(expansion.items()) if v}
    return via_constants, direct


# --------------------------------------------------------------------------
# coordinates and maps across the two bases
# --------------------------------------------------------------------------

def reindex_coords(a13: Sequence, pairing: IndexPairing) -> tuple[tuple[Fraction, ...], ...]:
    """Flat F3-coordinates → F2-valued fiber coordinates.

    Result ``[k]`` is the outer-coordinate tuple of the k-th fiber coordinate.
    """
    if len(a13) != pairing.dim:
        raise ValueError(f"expected {pairing.dim} flat coordinates, got {len(a13)}")
    return tuple(
        tuple(as_rational(a13[pairing.flatten(i, k)]) for i in range(pairing.outer_dim))
        for k in range(pairing.inner_dim)
    )


def flatten_coords(a12: Sequence[Sequence], pairing: IndexPairing) -> tuple[Fraction, ...]:
    if len(a12) != pairing.inner_dim or any(len(t) != pairing.outer_dim for t in a12):
        raise ValueError(f"expected {pairing.inner_dim} fiber coordinates of length {pairing.outer_dim}")
    out = [Fraction(0)] * pairing.dim
    for k, coords in enumerate(a12):
        for i, v in enumerate(coords):
            out[pairing.flatten(i, k)] = as_rational(v)
    return tuple(out)


def lift_linear_map(f12: Sequence[Sequence[Sequence]], outer: AlgebraTable) -> SquareMatrix:
    """Flat matrix of a map given by F2-valued entries.

    ``f12[i][j]`` holds the outer coordinates of the entry f^i_j, so the map is
    f(a)^i = f^i_j · a^j with the product taken in F2.  The flat matrix is
    f^{(p,i)}_{(l,j)} = C23[p][k][l] f^{ik}_j.
    """
    m = len(f12)
    if any(len(row) != m for row in f12):
        raise ValueError("F2-valued matrix must be square")
    n = outer.dim
    pairing = IndexPairing(n, m)
    rows = [[Fraction(0)] * pairing.dim for _ in range(pairing.dim)]
    for i, j in product(range(m), repeat=2):
        entry = f12[i][j]
        if len(entry) != n:
            raise ValueError(f"entry ({i},{j}) needs {n} outer coordinates, got {len(entry)}")
        for k, v in enumerate(entry):
            v = as_rational(v)
            if not v:
                continue
            for l in range(n):
                for p, c in outer.basis_product(k, l):
                    rows[pairing.flatten(p, i)][pairing.flatten(l, j)] += c * v
    return SquareMatrix(tuple(tuple(r) for r in rows))


def apply_fiber_map(f12: Sequence[Sequence[Sequence]], a12: Sequence[Sequence], outer: AlgebraTable):
    """f(a)^i = Σ_j f^i_j · a^j with products in the outer algebra; fiber coordinates in and out."""
    m = len(f12)
    out = []
    for i in range(m):
        total = outer.zero()
        for j in range(m):
            total = total + multiply(outer.element(f12[i][j]), outer.element(a12[j]))
        out.append(total.coords)
    return tuple(out)


# --------------------------------------------------------------------------
# tensor-order comparison
# --------------------------------------------------------------------------

def tensor_order_comparison(first: AlgebraTable, second: AlgebraTable, third: AlgebraTable) -> dict:
    """Compare A⊗(B⊗C) with (A⊗B)⊗C and with A⊗C (A⊗B collapsed to A).

    Reports dimensions, centre dimensions and structure flags; for the
    complex/quaternion case this shows why collapsing C⊗C to C changes the
    algebra while the nested products agree as real algebras.
    """
    from .algebra import center_dimension
    from .linear_maps import acting_generators, solve_commutant

    right_nested = tensor_product(first, tensor_product(second, third))
    left_nested = tensor_product(tensor_product(first, second), third)
    collapsed = tensor_product(first, third)
    n3 = third.dim
    # the non-unit basis vectors of the two field factors act by left multiplication
    nested_gens = [i * second.dim * n3 for i in range(1, first.dim)] + [j * n3 for j in range(1, second.dim)]
    collapsed_gens = [i * n3 for i in range(1, first.dim)]
    report = {}
    for key, A, gens in (("right_nested", right_nested, nested_gens),
                         ("left_nested", left_nested, nested_gens),
                         ("collapsed", collapsed, collapsed_gens)):
        s = structure_checks(A)
        report[key] = {
            "name": A.name,
            "dim": A.dim,
            "center_dim": center_dimension(A),
            "commutant_dim": solve_commutant(A, acting_generators(A, gens)).dimension,
            **s.as_dict(),
        }
    report["right_equals_left_table"] = right_nested == left_nested
    return report
