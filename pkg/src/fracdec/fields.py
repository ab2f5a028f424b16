"""Prime fields, extension fields, and trace-dual basis pairs.

Elements are canonical integers. In GF(q) an element is its residue in
[0, q). In GF(q^l), built as GF(q)[x]/(modulus), the element with
coordinate vector (c_0, ..., c_{l-1}) is encoded as sum(c_i * q**i), so
base-field elements keep their integer value when read in the extension.
"""

import itertools
from dataclasses import dataclass, field as dc_field

from . import polyring


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n):
    """Sorted distinct prime factors of n >= 1, by trial division."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class PrimeField:
    """GF(q) for prime q, with arithmetic on canonical integers."""

    def __init__(self, q):
        if not is_prime(q):
            raise ValueError(f"field size {q} is not prime")
        self.q = q
        self.order = q
        self.char = q

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.q == other.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"GF({self.q})"

    def check(self, a):
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not a canonical element of {self!r}")
        return a

    def elements(self):
        return range(self.q)

    def add(self, a, b):
        self.check(a), self.check(b)
        return (a + b) % self.q

    def sub(self, a, b):
        self.check(a), self.check(b)
        return (a - b) % self.q

    def neg(self, a):
        self.check(a)
        return (-a) % self.q

    def mul(self, a, b):
        self.check(a), self.check(b)
        return (a * b) % self.q

    def inv(self, a):
        self.check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return pow(a, self.q - 2, self.q)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        self.check(a)
        if e < 0:
            raise ValueError("exponent must be nonnegative; invert first")
        return pow(a, e, self.q)


def poly_is_irreducible(base, coeffs):
    """Whether a monic polynomial over GF(q) has no factor of degree >= 1.

    Trial division by every monic polynomial of degree up to deg/2, which is
    exhaustive at the small sizes used here.
    """
    coeffs = polyring.normalize(coeffs)
    deg = polyring.degree(coeffs)
    if deg < 1:
        return False
    if coeffs[-1] != 1:
        raise ValueError("irreducibility check expects a monic polynomial")
    for d in range(1, deg // 2 + 1):
        for lower in itertools.product(base.elements(), repeat=d):
            divisor = (*lower, 1)
            _, rem = polyring.poly_divmod(base, coeffs, divisor)
            if rem == ():
                return False
    return True


def default_modulus(base, l):
    """First monic irreducible of degree l under lexicographic order on
    (c_0, ..., c_{l-1}). Deterministic, so configs can omit the modulus."""
    for lower in itertools.product(base.elements(), repeat=l):
        candidate = (*lower, 1)
        if poly_is_irreducible(base, candidate):
            return candidate
    raise RuntimeError(f"no irreducible polynomial of degree {l} over {base!r}")


class ExtField:
    """GF(q^l) as GF(q)[x]/(modulus) with integer-encoded elements."""

    def __init__(self, base, l, modulus=None):
        if not isinstance(base, PrimeField):
            raise ValueError("extension must be built over a PrimeField")
        if l < 1:
            raise ValueError("extension degree must be at least 1")
        if modulus is None:
            modulus = default_modulus(base, l)
        modulus = polyring.normalize(tuple(base.check(c) for c in modulus))
        if polyring.degree(modulus) != l:
            raise ValueError(f"modulus degree {polyring.degree(modulus)} != {l}")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not poly_is_irreducible(base, modulus):
            raise ValueError(f"modulus {modulus} is reducible over {base!r}")
        self.base = base
        self.q = base.q
        self.degree = l
        self.modulus = modulus
        self.order = base.q ** l
        self.char = base.q
        # rows[i] = vector of x^(l+i) reduced mod modulus, for products
        neg_low = [base.neg(c) for c in modulus[:l]]
        rows = [neg_low]
        for _ in range(l - 2):
            prev = rows[-1]
            shifted = [0] + prev[:-1]
            top = prev[-1]
            rows.append([base.add(shifted[v], base.mul(top, neg_low[v]))
                         for v in range(l)])
        self._reduction = tuple(tuple(r) for r in rows)

    def __eq__(self, other):
        return (isinstance(other, ExtField)
                and self.q == other.q
                and self.degree == other.degree
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash(("ExtField", self.q, self.degree, self.modulus))

    def __repr__(self):
        return f"GF({self.q}^{self.degree})"

    def check(self, a):
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not a canonical element of {self!r}")
        return a

    def elements(self):
        return range(self.order)

    def to_vec(self, a):
        """Coordinates (c_0, ..., c_{l-1}) in the polynomial basis."""
        self.check(a)
        out = []
        for _ in range(self.degree):
            a, c = divmod(a, self.q)
            out.append(c)
        return tuple(out)

    def from_vec(self, vec):
        vec = tuple(vec)
        if len(vec) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(vec)}")
        acc = 0
        for c in reversed(vec):
            acc = acc * self.q + self.base.check(c)
        return acc

    def add(self, a, b):
        va, vb = self.to_vec(a), self.to_vec(b)
        return self.from_vec((x + y) % self.q for x, y in zip(va, vb))

    def sub(self, a, b):
        va, vb = self.to_vec(a), self.to_vec(b)
        return self.from_vec((x - y) % self.q for x, y in zip(va, vb))

    def neg(self, a):
        return self.from_vec((-c) % self.q for c in self.to_vec(a))

    def mul(self, a, b):
        self.check(a), self.check(b)
        q, l = self.q, self.degree
        if a < q or b < q:
            # one operand lies in the base field: scale coordinatewise
            if b < q:
                a, b = b, a
            return self.from_vec((a * c) % q for c in self.to_vec(b))
        va, vb = self.to_vec(a), self.to_vec(b)
        conv = [0] * (2 * l - 1)
        for i, ca in enumerate(va):
            if ca == 0:
                continue
            for j, cb in enumerate(vb):
                conv[i + j] = (conv[i + j] + ca * cb) % q
        out = conv[:l]
        for i in range(l - 1):
            spill = conv[l + i]
            if spill == 0:
                continue
            row = self._reduction[i]
            for v in range(l):
                out[v] = (out[v] + spill * row[v]) % q
        return self.from_vec(out)

    def pow(self, a, e):
        self.check(a)
        if e < 0:
            raise ValueError("exponent must be nonnegative; invert first")
        result = 1
        square = a
        while e:
            if e & 1:
                result = self.mul(result, square)
            e >>= 1
            if e:
                square = self.mul(square, square)
        return result

    def inv(self, a):
        self.check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frobenius(self, a):
        """The q-power map, a field automorphism fixing the base field."""
        return self.pow(a, self.q)

    def trace(self, a):
        """Sum of the l Frobenius conjugates; lands in the base field and is
        returned as a base-field integer."""
        acc = a
        conj = a
        for _ in range(self.degree - 1):
            conj = self.frobenius(conj)
            acc = self.add(acc, conj)
        return self.to_vec(acc)[0]


def polynomial_basis(ext):
    """The basis (1, x, x^2, ...) of the extension over its base field."""
    return tuple(ext.q ** i for i in range(ext.degree))


def _invert_matrix(base, rows):
    """Inverse of a square matrix over GF(q) by Gauss-Jordan elimination.

    Returns None when the matrix is singular.
    """
    n = len(rows)
    aug = [list(rows[i]) + [1 if j == i else 0 for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = base.inv(aug[col][col])
        aug[col] = [base.mul(inv, c) for c in aug[col]]
        for r in range(n):
            if r == col or aug[r][col] == 0:
                continue
            factor = aug[r][col]
            aug[r] = [base.sub(aug[r][j], base.mul(factor, aug[col][j]))
                      for j in range(2 * n)]
    return tuple(tuple(row[n:]) for row in aug)


def dual_basis(ext, zeta=None):
    """Trace-dual basis pair for the extension over its base field.

    Given a basis zeta (default: the polynomial basis), returns a
    TraceDualBasis whose nu satisfies trace(nu_i * zeta_j) = delta_ij.
    nu is obtained by inverting the Gram matrix G_ij = trace(zeta_i zeta_j);
    a singular Gram matrix means zeta is not a basis.
    """
    if zeta is None:
        zeta = polynomial_basis(ext)
    zeta = tuple(ext.check(z) for z in zeta)
    l = ext.degree
    if len(zeta) != l:
        raise ValueError(f"basis must have {l} elements, got {len(zeta)}")
    gram = [[ext.trace(ext.mul(zi, zj)) for zj in zeta] for zi in zeta]
    ginv = _invert_matrix(ext.base, gram)
    if ginv is None:
        raise ValueError("given elements are linearly dependent over the base "
                         "field (singular trace Gram matrix)")
    nu = []
    for i in range(l):
        acc = 0
        for j in range(l):
            acc = ext.add(acc, ext.mul(ginv[i][j], zeta[j]))
        nu.append(acc)
    return TraceDualBasis(ext=ext, zeta=zeta, nu=tuple(nu))


@dataclass(frozen=True)
class TraceDualBasis:
    """A basis zeta of GF(q^l) over GF(q) together with its trace dual nu.

    project(beta) yields the base-field coordinates (trace(zeta_j * beta))_j,
    and reconstruct recovers beta = sum_j coords_j * nu_j, so the pair gives
    a lossless split of every extension element into l base-field symbols.
    Both directions are precomputed as l x l matrices over the base field.
    """

    ext: ExtField
    zeta: tuple
    nu: tuple
    _proj: tuple = dc_field(init=False, repr=False, compare=False)
    _recon: tuple = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ext = self.ext
        l = ext.degree
        if len(self.zeta) != l or len(self.nu) != l:
            raise ValueError(f"basis pair must have {l} elements per side")
        for i, ni in enumerate(self.nu):
            for j, zj in enumerate(self.zeta):
                want = 1 if i == j else 0
                if ext.trace(ext.mul(ni, zj)) != want:
                    raise ValueError(
                        f"trace(nu_{i} * zeta_{j}) != {want}: "
                        "the two families are not trace-dual")
        # projection matrix: row u maps coordinates of beta to trace(zeta_u beta)
        unit_traces = [[ext.trace(ext.mul(z, ext.q ** v)) for v in range(l)]
                       for z in self.zeta]
        recon_cols = [ext.to_vec(n) for n in self.nu]
        recon_rows = [tuple(recon_cols[i][v] for i in range(l)) for v in range(l)]
        object.__setattr__(self, "_proj", tuple(tuple(r) for r in unit_traces))
        object.__setattr__(self, "_recon", tuple(recon_rows))

    @property
    def l(self):
        return self.ext.degree

    def project(self, beta):
        """Base-field coordinate vector (trace(zeta_0 beta), ..., trace(zeta_{l-1} beta))."""
        vec = self.ext.to_vec(beta)
        q = self.ext.q
        return tuple(sum(row[v] * vec[v] for v in range(self.l)) % q
                     for row in self._proj)

    def reconstruct(self, coords):
        """Inverse of project: the unique beta with the given trace coordinates."""
        coords = tuple(coords)
        if len(coords) != self.l:
            raise ValueError(f"expected {self.l} coordinates, got {len(coords)}")
        for c in coords:
            self.ext.base.check(c)
        q = self.ext.q
        vec = tuple(sum(row[i] * coords[i] for i in range(self.l)) % q
                    for row in self._recon)
        return self.ext.from_vec(vec)
