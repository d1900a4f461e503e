"""Linear maps of an algebra: commutation constraints and standard components.

A map is stored as a :class:`SquareMatrix` ``M`` with ``M[i][j] = f^i_j``
(row = value index, column = argument index), so ``y^i = f^i_j x^j``.

Its standard components ``f^{kr}`` describe the same map as
x ↦ Σ f^{kr} e_k x e_r; they are also stored as a SquareMatrix, indexed
``[k][r]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .algebra import AlgebraTable, AlgElement, left_mul_matrix, multiply
from .linalg import SingularSystemError, SquareMatrix, canonical_basis, nullspace, solve
from .rationals import format_rational

LinearMapMatrix = SquareMatrix
StandardComponents = SquareMatrix

Entry = tuple[int, int]


def acting_generators(A: AlgebraTable, indices: Sequence[int] | None = None) -> list[SquareMatrix]:
    """Left-multiplication matrices of the chosen basis vectors (all by default)."""
    if indices is None:
        indices = range(A.dim)
    return [left_mul_matrix(A.basis(i)) for i in indices]


# --------------------------------------------------------------------------
# relations
# --------------------------------------------------------------------------

def entry_name(entry: Entry) -> str:
    return f"f[{entry[0]}][{entry[1]}]"


def _signed(coef: Fraction, name: str, leading: bool) -> str:
    if coef == 1:
        return name if leading else f"+ {name}"
    if coef == -1:
        return f"-{name}" if leading else f"- {name}"
    text = format_rational(abs(coef))
    if leading:
        return f"{'-' if coef < 0 else ''}{text}*{name}"
    return f"{'-' if coef < 0 else '+'} {text}*{name}"


@dataclass(frozen=True)
class RelationSet:
    """Every matrix entry as a combination of a chosen set of free entries.

    ``free`` lists the free entries in row-major order; ``expressions`` maps
    every other entry to ``((free entry, coefficient), ...)`` (empty = 0).
    """

    n: int
    free: tuple[Entry, ...]
    expressions: tuple[tuple[Entry, tuple[tuple[Entry, Fraction], ...]], ...]

    def expression(self, entry: Entry) -> tuple[tuple[Entry, Fraction], ...]:
        if entry in self.free:
            return ((entry, Fraction(1)),)
        return dict(self.expressions)[entry]

    def chains(self) -> list[list[tuple[Entry, int]]]:
        """±1 relations grouped by free entry: ``[(free, 1), (dep, ±1), ...]``."""
        groups: dict[Entry, list[tuple[Entry, int]]] = {f: [] for f in self.free}
        for entry, expr in self.expressions:
            if len(expr) == 1 and abs(expr[0][1]) == 1:
                groups[expr[0][0]].append((entry, int(expr[0][1])))
        return [[(f, 1)] + deps for f, deps in groups.items() if deps]

    def zeros(self) -> list[Entry]:
        return [entry for entry, expr in self.expressions if not expr]

    def general(self) -> list[tuple[Entry, tuple[tuple[Entry, Fraction], ...]]]:
        return [(entry, expr) for entry, expr in self.expressions
                if len(expr) > 1 or (len(expr) == 1 and abs(expr[0][1]) != 1)]

    def lines(self) -> list[str]:
        """Relations as text, one chain / zero / raw equation per line."""
        out = []
        for chain in self.chains():
            out.append(" = ".join(_signed(Fraction(s), entry_name(e), True) for e, s in chain))
        for entry in self.zeros():
            out.append(f"{entry_name(entry)} = 0")
        for entry, expr in self.general():
            rhs = " ".join(_signed(c, entry_name(f), k == 0) for k, (f, c) in enumerate(expr))
            out.append(f"{entry_name(entry)} = {rhs}")
        return out

    def to_basis(self) -> list[SquareMatrix]:
        """One matrix per free entry: 1 there, the induced values elsewhere."""
        basis = []
        for f in self.free:
            values = {f: Fraction(1)}
            for entry, expr in self.expressions:
                for g, c in expr:
                    if g == f:
                        values[entry] = c
            basis.append(SquareMatrix.from_sparse(self.n, values))
        return basis


def extract_relations(basis: Sequence[SquareMatrix]) -> RelationSet:
    """Express all entries through free entries chosen by row-major first occurrence."""
    if not basis:
        raise ValueError("empty basis: the zero space has no free entries; use solve_commutant for it")
    n = basis[0].n
    canon, pivots = canonical_basis([m.entries() for m in basis])
    free = tuple(divmod(p, n) for p in pivots)
    pivot_set = set(pivots)
    expressions = []
    for idx in range(n * n):
        if idx in pivot_set:
            continue
        expr = tuple((free[b], vec[idx]) for b, vec in enumerate(canon) if vec[idx])
        expressions.append((divmod(idx, n), expr))
    return RelationSet(n, free, tuple(expressions))


@dataclass(frozen=True)
class Commutant:
    dimension: int
    basis: tuple[SquareMatrix, ...]
    relations: RelationSet


def commutation_rows(generators: Sequence[SquareMatrix]) -> list[dict[int, Fraction]]:
    """Rows of the system f·G - G·f = 0 in the row-major unknowns f[i][j]."""
    rows = []
    for G in generators:
        n = G.n
        for i, j in product(range(n), repeat=2):
            row: dict[int, Fraction] = {}
            # (f G)[i][j] = Σ_m f[i][m] G[m][j]
            for m in range(n):
                g = G.rows[m][j]
                if g:
                    row[i * n + m] = row.get(i * n + m, 0) + g
            # (G f)[i][j] = Σ_m G[i][m] f[m][j]
            for m in range(n):
                g = G.rows[i][m]
                if g:
                    row[m * n + j] = row.get(m * n + j, 0) - g
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    return rows


def solve_commutant(A: AlgebraTable, generators: Sequence[SquareMatrix] | None = None) -> Commutant:
    """All matrices commuting with the generators (default: left multiplication by every basis vector)."""
    n = A.dim
    if generators is None:
        generators = acting_generators(A)
    for G in generators:
        if G.n != n:
            raise ValueError(f"generator is {G.n}×{G.n}, algebra has dimension {n}")
    raw = nullspace(commutation_rows(generators), n * n)
    if not raw:
        return Commutant(0, (), RelationSet(n, (), tuple((divmod(i, n), ()) for i in range(n * n))))
    canon, _ = canonical_basis(raw)
    basis = tuple(SquareMatrix.from_entries(n, v) for v in canon)
    return Commutant(len(basis), basis, extract_relations(basis))


# --------------------------------------------------------------------------
# standard components
# --------------------------------------------------------------------------

def standard_coefficients(A: AlgebraTable) -> dict[Entry, dict[Entry, Fraction]]:
    """Matrix entries as linear forms in the standard components.

    ``result[(i, j)][(k, r)] = Σ_p C[p][k][j] C[i][p][r]``: the e_i-coordinate
    of e_k e_j e_r.
    """
    n = A.dim
    out: dict[Entry, dict[Entry, Fraction]] = {(i, j): {} for i, j in product(range(n), repeat=2)}
    for k, j in product(range(n), repeat=2):
        for p, u in A.basis_product(k, j):
            for r in range(n):
                for i, v in A.basis_product(p, r):
                    form = out[(i, j)]
                    form[(k, r)] = form.get((k, r), 0) + u * v
    return {e: {kr: c for kr, c in sorted(form.items()) if c} for e, form in out.items()}


def standard_to_matrix(std: StandardComponents, A: AlgebraTable) -> LinearMapMatrix:
    """Matrix of x ↦ Σ f^{kr} e_k x e_r."""
    if std.n != A.dim:
        raise ValueError(f"{std.n}×{std.n} components for an algebra of dimension {A.dim}")
    coeffs = standard_coefficients(A)
    values = {}
    for entry, form in coeffs.items():
        values[entry] = sum((c * std.rows[k][r] for (k, r), c in form.items()), Fraction(0))
    return SquareMatrix.from_sparse(A.dim, values)


@dataclass(frozen=True)
class StandardBlock:
    """A decoupled piece of the entries ↔ components system."""

    entries: tuple[Entry, ...]
    components: tuple[Entry, ...]
    matrix: tuple[tuple[Fraction, ...], ...]  # rows follow entries, columns follow components


def standard_blocks(A: AlgebraTable) -> list[StandardBlock]:
    """Split the standard-component system into independent blocks.

    Blocks are the connected components of the bipartite graph linking each
    matrix entry to the components its linear form uses.
    """
    coeffs = standard_coefficients(A)
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for entry, form in coeffs.items():
        find(("e", entry))
        for kr in form:
            parent[find(("e", entry))] = find(("s", kr))
    n = A.dim
    for kr in product(range(n), repeat=2):
        find(("s", kr))
    groups: dict = {}
    for node in list(parent):
        groups.setdefault(find(node), []).append(node)
    blocks = []
    for nodes in groups.values():
        entries = tuple(sorted(x[1] for x in nodes if x[0] == "e"))
        comps = tuple(sorted(x[1] for x in nodes if x[0] == "s"))
        mat = tuple(tuple(coeffs[e].get(kr, Fraction(0)) for kr in comps) for e in entries)
        blocks.append(StandardBlock(entries, comps, mat))
    blocks.sort(key=lambda b: (b.entries or b.components)[0])
    return blocks


def matrix_to_standard(M: LinearMapMatrix, A: AlgebraTable) -> StandardComponents:
    """Standard components of the map with matrix M, by exact block solves.

    Raises SingularSystemError when some block is not uniquely solvable.
    """
    if M.n != A.dim:
        raise ValueError(f"{M.n}×{M.n} matrix for an algebra of dimension {A.dim}")
    values: dict[Entry, Fraction] = {}
    for block in standard_blocks(A):
        if len(block.entries) != len(block.components):
            raise SingularSystemError(
                f"block with {len(block.entries)} entries and {len(block.components)} components is not square")
        rhs = [M.rows[i][j] for i, j in block.entries]
        sol = solve(block.matrix, rhs)
        values.update(zip(block.components, sol))
    return SquareMatrix.from_sparse(A.dim, values)


def sandwich_check(M: LinearMapMatrix, A: AlgebraTable) -> AlgElement:
    """Σ_j e_j · (Σ_i M[i][j] e_i).

    The row of basis vectors multiplies each column of M (read as an
    element) from the left; for a Jacobian this is the left Cauchy-Riemann-
    Fueter operator applied to the map, since column j is ∂f/∂x^j.
    """
    if not A.unital:
        raise ValueError("sandwich contraction needs a unital algebra")
    total = A.zero()
    for j in range(A.dim):
        column = A.element(M.rows[i][j] for i in range(A.dim))
        total = total + multiply(A.basis(j), column)
    return total


def is_algebra_of_maps(basis: Sequence[SquareMatrix],
                       pairs: Sequence[tuple[SquareMatrix, SquareMatrix]] | None = None) -> bool:
    """Whether the span of ``basis`` is closed under matrix product.

    Checks every pair of basis matrices, or only the given ``pairs``.
    """
    if not basis:
        return True
    vectors = [m.entries() for m in basis]
    canon, pivots = canonical_basis(vectors)

    def in_span(v):
        # canonical basis: coefficient of row b is v[pivot_b]
        rest = list(v)
        for row, p in zip(canon, pivots):
            c = rest[p]
            if c:
                rest = [x - c * y for x, y in zip(rest, row)]
        return not any(rest)

    if pairs is None:
        pairs = [(X, Y) for X in basis for Y in basis]
    return all(in_span((X @ Y).entries()) for X, Y in pairs)
