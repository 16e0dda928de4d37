"""Exact linear algebra: spaces, linear and bilinear maps, subspaces.

Vectors are tuples of field scalars, matrices are tuples of row tuples.
Subspaces are kept in reduced row echelon form so that equal subspaces
have equal representations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field


@dataclass(frozen=True)
class Space:
    """Finite-dimensional vector space with a labelled basis."""

    field: Field
    labels: tuple

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate basis labels: {self.labels}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def zero(self):
        z = self.field.zero()
        return tuple(z for _ in range(self.dim))

    def basis_vector(self, i: int):
        z, one = self.field.zero(), self.field.one()
        return tuple(one if j == i else z for j in range(self.dim))

    def basis(self):
        return [self.basis_vector(i) for i in range(self.dim)]


def space(field: Field, labels) -> Space:
    return Space(field, tuple(labels))


def vadd(field: Field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vsub(field: Field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vneg(field: Field, u):
    return tuple(field.neg(a) for a in u)


def vscale(field: Field, c, u):
    return tuple(field.mul(c, a) for a in u)


def is_zero(u) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class LinMap:
    """Linear map; column j of `matrix` is the image of basis vector j."""

    domain: Space
    codomain: Space
    matrix: tuple  # rows: codomain.dim, cols: domain.dim

    def __post_init__(self):
        if self.domain.field != self.codomain.field:
            raise ValueError("domain and codomain fields differ")
        if len(self.matrix) != self.codomain.dim or any(
            len(row) != self.domain.dim for row in self.matrix
        ):
            raise ValueError("matrix shape does not match spaces")

    @property
    def field(self) -> Field:
        return self.domain.field

    def apply(self, v):
        F = self.field
        out = [F.zero()] * self.codomain.dim
        for j, c in enumerate(v):
            if c == 0:
                continue
            for i in range(self.codomain.dim):
                m = self.matrix[i][j]
                if m != 0:
                    out[i] = F.add(out[i], F.mul(m, c))
        return tuple(out)

    def column(self, j: int):
        return tuple(row[j] for row in self.matrix)

    def after(self, other: "LinMap") -> "LinMap":
        """self o other."""
        if other.codomain != self.domain:
            raise ValueError("maps not composable")
        cols = [self.apply(other.column(j)) for j in range(other.domain.dim)]
        return from_columns(other.domain, self.codomain, cols)

    def add(self, other: "LinMap") -> "LinMap":
        F = self.field
        rows = tuple(
            tuple(F.add(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.matrix, other.matrix)
        )
        return LinMap(self.domain, self.codomain, rows)

    def sub(self, other: "LinMap") -> "LinMap":
        F = self.field
        rows = tuple(
            tuple(F.sub(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.matrix, other.matrix)
        )
        return LinMap(self.domain, self.codomain, rows)

    def rank(self) -> int:
        return len(rref(self.field, [self.column(j) for j in range(self.domain.dim)]))


def from_columns(domain: Space, codomain: Space, cols) -> LinMap:
    rows = tuple(tuple(col[i] for col in cols) for i in range(codomain.dim))
    return LinMap(domain, codomain, rows)


def identity_map(sp: Space) -> LinMap:
    z, one = sp.field.zero(), sp.field.one()
    rows = tuple(
        tuple(one if i == j else z for j in range(sp.dim)) for i in range(sp.dim)
    )
    return LinMap(sp, sp, rows)


def zero_map(domain: Space, codomain: Space) -> LinMap:
    z = domain.field.zero()
    rows = tuple(tuple(z for _ in range(domain.dim)) for _ in range(codomain.dim))
    return LinMap(domain, codomain, rows)


@dataclass(frozen=True)
class BilMap:
    """Bilinear map; tensor[k][i][j] is the k-coordinate of (b_i, b_j)."""

    left: Space
    right: Space
    codomain: Space
    tensor: tuple  # [codomain.dim][left.dim][right.dim]

    def __post_init__(self):
        if not (self.left.field == self.right.field == self.codomain.field):
            raise ValueError("bilinear map spaces over different fields")
        if (
            len(self.tensor) != self.codomain.dim
            or any(len(plane) != self.left.dim for plane in self.tensor)
            or any(len(row) != self.right.dim for plane in self.tensor for row in plane)
        ):
            raise ValueError("tensor shape does not match spaces")

    @property
    def field(self) -> Field:
        return self.left.field

    def on_basis(self, i: int, j: int):
        return tuple(self.tensor[k][i][j] for k in range(self.codomain.dim))

    def apply(self, u, v):
        F = self.field
        out = [F.zero()] * self.codomain.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                ab = F.mul(a, b)
                for k in range(self.codomain.dim):
                    c = self.tensor[k][i][j]
                    if c != 0:
                        out[k] = F.add(out[k], F.mul(c, ab))
        return tuple(out)

    def left_mul_matrix(self, u) -> LinMap:
        """The linear map v -> apply(u, v), as a matrix (for hot loops)."""
        F = self.field
        rows = []
        for k in range(self.codomain.dim):
            row = []
            for j in range(self.right.dim):
                acc = F.zero()
                for i, a in enumerate(u):
                    if a != 0:
                        c = self.tensor[k][i][j]
                        if c != 0:
                            acc = F.add(acc, F.mul(c, a))
                row.append(acc)
            rows.append(tuple(row))
        return LinMap(self.right, self.codomain, tuple(rows))

    def swapped(self) -> "BilMap":
        """(u, v) -> apply(v, u)."""
        tensor = tuple(
            tuple(
                tuple(self.tensor[k][j][i] for j in range(self.left.dim))
                for i in range(self.right.dim)
            )
            for k in range(self.codomain.dim)
        )
        return BilMap(self.right, self.left, self.codomain, tensor)

    def sub(self, other: "BilMap") -> "BilMap":
        F = self.field
        tensor = tuple(
            tuple(
                tuple(F.sub(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(pa, pb)
            )
            for pa, pb in zip(self.tensor, other.tensor)
        )
        return BilMap(self.left, self.right, self.codomain, tensor)

    def scale(self, c) -> "BilMap":
        F = self.field
        tensor = tuple(
            tuple(tuple(F.mul(c, a) for a in row) for row in plane)
            for plane in self.tensor
        )
        return BilMap(self.left, self.right, self.codomain, tensor)


def bilinear_from_rule(left: Space, right: Space, codomain: Space, rule) -> BilMap:
    """Build a BilMap from a rule on basis index pairs returning vectors."""
    cols = [[rule(i, j) for j in range(right.dim)] for i in range(left.dim)]
    tensor = tuple(
        tuple(tuple(cols[i][j][k] for j in range(right.dim)) for i in range(left.dim))
        for k in range(codomain.dim)
    )
    return BilMap(left, right, codomain, tensor)


def zero_bilmap(left: Space, right: Space, codomain: Space) -> BilMap:
    z = left.field.zero()
    tensor = tuple(
        tuple(tuple(z for _ in range(right.dim)) for _ in range(left.dim))
        for _ in range(codomain.dim)
    )
    return BilMap(left, right, codomain, tensor)


def rref(field: Field, rows):
    """Reduced row echelon form; zero rows dropped. Canonical for a span."""
    work = [list(r) for r in rows if not is_zero(r)]
    if not work:
        return []
    ncols = len(work[0])
    result = []
    pivot_col = 0
    row = 0
    while row < len(work) and pivot_col < ncols:
        pivot_row = None
        for r in range(row, len(work)):
            if work[r][pivot_col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            pivot_col += 1
            continue
        work[row], work[pivot_row] = work[pivot_row], work[row]
        inv = field.inv(work[row][pivot_col])
        work[row] = [field.mul(inv, a) for a in work[row]]
        for r in range(len(work)):
            if r != row and work[r][pivot_col] != 0:
                c = work[r][pivot_col]
                work[r] = [
                    field.sub(a, field.mul(c, b)) for a, b in zip(work[r], work[row])
                ]
        row += 1
        pivot_col += 1
    for r in work:
        if not is_zero(r):
            result.append(tuple(r))
    # rows are already sorted by pivot column after forward elimination
    return result


def _pivot_columns(basis):
    pivots = []
    for row in basis:
        for j, a in enumerate(row):
            if a != 0:
                pivots.append(j)
                break
    return pivots


@dataclass(frozen=True)
class Subspace:
    """Subspace of an ambient space, basis in reduced row echelon form."""

    ambient: Space
    basis: tuple

    @classmethod
    def span(cls, ambient: Space, vectors) -> "Subspace":
        return cls(ambient, tuple(rref(ambient.field, list(vectors))))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self):
        return _pivot_columns(self.basis)

    def reduce(self, v):
        """Canonical representative of v modulo this subspace."""
        F = self.ambient.field
        v = list(v)
        for row, p in zip(self.basis, self.pivots()):
            c = v[p]
            if c != 0:
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return is_zero(self.reduce(v))

    def coords(self, v):
        """Coefficients of v in this basis; None if v is not in the span."""
        if not self.contains(v):
            return None
        return tuple(v[p] for p in self.pivots())


def in_subspace(v, sub: Subspace) -> bool:
    if len(v) != sub.ambient.dim:
        raise ValueError("vector does not live in the ambient space")
    return sub.contains(v)


def kernel(f: LinMap) -> Subspace:
    """Canonical basis of {v : f(v) = 0}."""
    F = f.field
    n = f.domain.dim
    echelon = rref(F, [f.column(j) + f.domain.basis_vector(j) for j in range(n)])
    # rows of `echelon` are (image | preimage); rows with zero image part
    # would not appear here because rref drops zero rows only of the full
    # row, so split manually.
    m = f.codomain.dim
    vectors = []
    for row in echelon:
        if is_zero(row[:m]):
            vectors.append(row[m:])
    # rows with zero image give the kernel, but the above echelon mixes
    # image coordinates first so the kernel part needs re-canonicalising
    return Subspace.span(f.domain, vectors)


def quotient(ambient: Space, sub: Subspace):
    """Quotient space and its projection.

    The quotient basis is indexed by the non-pivot coordinates of `sub`;
    the projection sends a vector to the non-pivot coordinates of its
    canonical representative.
    """
    if sub.ambient != ambient:
        raise ValueError("subspace does not live in the ambient space")
    pivots = set(sub.pivots())
    free = [j for j in range(ambient.dim) if j not in pivots]
    qspace = Space(ambient.field, tuple(ambient.labels[j] for j in free))
    cols = []
    for j in range(ambient.dim):
        reduced = sub.reduce(ambient.basis_vector(j))
        cols.append(tuple(reduced[c] for c in free))
    proj = from_columns(ambient, qspace, cols)
    return qspace, proj


def direct_sum(a: Space, b: Space, left_prefix: str = "l_", right_prefix: str = "r_"):
    """Direct sum space plus the four structural maps.

    Returns (space, incl_a, incl_b, proj_a, proj_b).
    """
    if a.field != b.field:
        raise ValueError("direct sum of spaces over different fields")
    labels = tuple(left_prefix + s for s in a.labels) + tuple(
        right_prefix + s for s in b.labels
    )
    total = Space(a.field, labels)
    z = a.field.zero()

    def pad(v, before, after):
        return tuple([z] * before) + tuple(v) + tuple([z] * after)

    incl_a = from_columns(
        a, total, [pad(a.basis_vector(i), 0, b.dim) for i in range(a.dim)]
    )
    incl_b = from_columns(
        b, total, [pad(b.basis_vector(i), a.dim, 0) for i in range(b.dim)]
    )
    proj_a = from_columns(
        total,
        a,
        [a.basis_vector(i) for i in range(a.dim)] + [a.zero() for _ in range(b.dim)],
    )
    proj_b = from_columns(
        total,
        b,
        [b.zero() for _ in range(a.dim)] + [b.basis_vector(i) for i in range(b.dim)],
    )
    return total, incl_a, incl_b, proj_a, proj_b


def pullback_space(t: LinMap, s: LinMap) -> Subspace:
    """{(x, y) : t(x) = s(y)} inside domain(t) (+) domain(s)."""
    if t.codomain != s.codomain:
        raise ValueError("pullback requires a common codomain")
    total, _, _, proj_a, proj_b = direct_sum(t.domain, s.domain)
    diff = t.after(proj_a).sub(s.after(proj_b))
    return kernel(diff)
