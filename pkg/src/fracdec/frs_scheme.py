"""Folded Reed-Solomon array code decodable from a prefix of each column.

Columns are l consecutive evaluations of one polynomial h of degree
< kl at successive powers of a primitive element gamma: column i holds
(h(gamma^(i*l)), ..., h(gamma^(i*l + l - 1))). The decoder asks each column
for only its first alpha*l entries. The punctured word it sees is itself a
folded code with n columns of height alpha*l built from a degree < kl
polynomial, i.e. an (n, k/alpha) MDS array code, so trial decoding corrects
floor((n - k/alpha) / 2) column errors while downloading exactly an alpha
fraction. Nothing outside the prefix is ever read, so downloaded symbols
equal accessed symbols: the access overhead of combining full columns is
zero.
"""

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .arraycode import DownloadBundle, apply_error_pattern
from .budget import check_budget
from .errors import DecodeFailure
from .fields import PrimeField, is_prime, prime_factors
from .polyring import interpolate, normalize, poly_eval
from .rationals import as_fraction


def smallest_prime_above(bound):
    """Smallest prime strictly greater than bound."""
    p = max(2, bound + 1)
    while not is_prime(p):
        p += 1
    return p


def smallest_primitive_root(p):
    """Smallest primitive element of GF(p), checked via the factorization
    of p - 1."""
    field = PrimeField(p)
    factors = prime_factors(p - 1) if p > 2 else []
    for g in range(1, p):
        if all(field.pow(g, (p - 1) // f) != 1 for f in factors):
            return g
    raise RuntimeError(f"no primitive root modulo {p}")  # unreachable for prime p


def is_primitive_root(p, g):
    field = PrimeField(p)
    field.check(g)
    if g == 0:
        return False
    return all(field.pow(g, (p - 1) // f) != 1 for f in prime_factors(p - 1))


@dataclass(frozen=True)
class FrsConfig:
    """Frozen parameters of one folded-scheme instance.

    field: GF(p) with p > n*l so the n*l evaluation points gamma^0, ...,
        gamma^(nl-1) are distinct.
    gamma: a primitive element of the field.
    n, k, l: column count, message size in columns, column height.
    alpha: download fraction; alpha*l and k/alpha must be integers.
    """

    field: PrimeField
    gamma: int
    n: int
    k: int
    l: int
    alpha: Fraction
    points: tuple = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        field, n, k, l, alpha = self.field, self.n, self.k, self.l, self.alpha
        if n < 1 or k < 1 or l < 1:
            raise ValueError("n, k, l must all be at least 1")
        if k > n:
            raise ValueError(f"need k <= n, got k={k}, n={n}")
        if not 0 < alpha <= 1:
            raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
        if (alpha * l).denominator != 1:
            raise ValueError(f"alpha*l = {alpha * l} must be an integer")
        if (k / alpha).denominator != 1:
            raise ValueError(f"k/alpha = {k / alpha} must be an integer")
        if k / alpha > n:
            raise ValueError(
                f"k/alpha = {k / alpha} exceeds n = {n}: the punctured code "
                "would have rate above 1")
        if field.q <= n * l:
            raise ValueError(
                f"field size {field.q} must exceed n*l = {n * l} for distinct "
                "evaluation points")
        if not is_primitive_root(field.q, self.gamma):
            raise ValueError(f"{self.gamma} is not a primitive root mod {field.q}")
        points = []
        x = 1
        for _ in range(n * l):
            points.append(x)
            x = field.mul(x, self.gamma)
        object.__setattr__(self, "points", tuple(points))

    @property
    def alpha_l(self):
        """Prefix height: how many symbols each column serves."""
        return int(self.alpha * self.l)

    @property
    def punctured_dim(self):
        """Column dimension k/alpha of the punctured code."""
        return int(self.k / self.alpha)

    @property
    def message_length(self):
        return self.k * self.l

    @property
    def radius(self):
        """floor((n - k/alpha) / 2), met with equality by frs_decode_trial."""
        return (self.n - self.punctured_dim) // 2

    @property
    def downloaded_per_word(self):
        return self.n * self.alpha_l

    @property
    def accessed_per_word(self):
        """Equal to downloaded_per_word: prefixes are served verbatim, so no
        extra symbols are touched."""
        return self.n * self.alpha_l

    def column_points(self, i, height=None):
        """Evaluation points of column i (first `height` of them)."""
        if height is None:
            height = self.l
        return self.points[i * self.l: i * self.l + height]


def frs_make_config(n, k, l, alpha, *, p=None, gamma=None):
    """Build an FrsConfig; p defaults to the smallest prime > n*l and gamma
    to the smallest primitive root mod p."""
    if p is None:
        p = smallest_prime_above(n * l)
    field = PrimeField(p)
    if gamma is None:
        gamma = smallest_primitive_root(p)
    return FrsConfig(field=field, gamma=gamma, n=n, k=k, l=l,
                     alpha=as_fraction(alpha))


def frs_encode(cfg, message):
    """Encode kl field symbols (coefficients of h, lowest first) into n
    columns of l consecutive evaluations."""
    message = tuple(message)
    if len(message) != cfg.message_length:
        raise ValueError(
            f"message must have exactly kl = {cfg.message_length} symbols")
    for c in message:
        cfg.field.check(c)
    h = normalize(message)
    return tuple(
        tuple(poly_eval(cfg.field, h, x) for x in cfg.column_points(i))
        for i in range(cfg.n))


def frs_download_prefix(cfg, column):
    """The alpha*l symbols a column serves: its prefix, read verbatim."""
    column = tuple(column)
    if len(column) != cfg.l:
        raise ValueError(f"column must have l = {cfg.l} symbols")
    return column[:cfg.alpha_l]


def frs_download_all(cfg, columns):
    """Prefix downloads from every column; downloaded == accessed."""
    columns = tuple(columns)
    if len(columns) != cfg.n:
        raise ValueError(f"word must have n = {cfg.n} columns")
    return DownloadBundle(
        per_column=tuple(frs_download_prefix(cfg, col) for col in columns),
        downloaded=cfg.downloaded_per_word,
        accessed=cfg.accessed_per_word,
    )


def trial_decode_columns(field, columns, column_points, degree_bound, t_star):
    """Interpolate-and-verify decoding for evaluation array codes.

    Tries discarding every subset of up to t_star columns, smallest subsets
    first and each size in ascending index order. For each trial it
    interpolates a candidate from the first degree_bound surviving
    evaluations and accepts iff the candidate reproduces every surviving
    evaluation. Returns (coefficients, discarded_columns) for the first
    accepted trial; raises DecodeFailure when none is.

    When the columns carry distinct evaluation points of one polynomial of
    degree < degree_bound and at most t_star columns are corrupted, the
    clean-column agreement count exceeds what two distinct candidates can
    share, so the accepted candidate is unique and correct.
    """
    n = len(columns)
    if len(column_points) != n:
        raise ValueError("need one point tuple per column")
    for pts, col in zip(column_points, columns):
        if len(pts) != len(col):
            raise ValueError("column/point length mismatch")
    pairs_per_column = [tuple(zip(pts, col))
                        for pts, col in zip(column_points, columns)]
    for size in range(min(t_star, n) + 1):
        for discard in itertools.combinations(range(n), size):
            discarded = set(discard)
            pairs = [pair for i in range(n) if i not in discarded
                     for pair in pairs_per_column[i]]
            if len(pairs) < degree_bound:
                continue
            candidate = interpolate(field, pairs[:degree_bound])
            if all(poly_eval(field, candidate, x) == y
                   for x, y in pairs[degree_bound:]):
                return candidate, frozenset(discard)
    raise DecodeFailure(
        f"no consistent candidate after discarding up to {t_star} columns")


def frs_decode_trial(cfg, per_column):
    """Decode prefix downloads, fixing up to `radius` bad columns.

    Returns (message, corrected_columns) with the message padded back to
    length kl. A wrong accept would need two degree < kl polynomials sharing
    alpha*l * (n - 2*radius) > kl - 1 evaluation points, which cannot happen,
    so within the radius the result is always the stored message.
    """
    per_column = tuple(tuple(c) for c in per_column)
    if len(per_column) != cfg.n or any(len(c) != cfg.alpha_l for c in per_column):
        raise ValueError(
            f"expected {cfg.n} columns of {cfg.alpha_l} downloaded symbols")
    for col in per_column:
        for v in col:
            cfg.field.check(v)
    column_points = [cfg.column_points(i, cfg.alpha_l) for i in range(cfg.n)]
    h, discarded = trial_decode_columns(cfg.field, per_column, column_points,
                                        cfg.message_length, cfg.radius)
    return _pad(h, cfg.message_length), discarded


def _pad(coeffs, length):
    return tuple(coeffs) + (0,) * (length - len(coeffs))


def bundle_columns(word, height):
    """Group a flat evaluation word into columns of the given height."""
    word = tuple(word)
    if height < 1 or len(word) % height != 0:
        raise ValueError(f"word length {len(word)} is not a multiple of {height}")
    return tuple(word[i: i + height] for i in range(0, len(word), height))


def flatten_columns(columns):
    """Inverse of bundle_columns: concatenate columns of uniform height."""
    columns = tuple(tuple(c) for c in columns)
    if columns and any(len(c) != len(columns[0]) for c in columns):
        raise ValueError("columns must have uniform height")
    return tuple(v for col in columns for v in col)


def frs_list_decode_bruteforce(cfg, per_column, radius):
    """All messages whose prefix downloads are within `radius` column
    changes of the given ones, in canonical message order.

    Full q^(kl) enumeration, gated by the budget; the reference answer for
    list-decoding questions about the punctured code.
    """
    per_column = tuple(tuple(c) for c in per_column)
    if len(per_column) != cfg.n or any(len(c) != cfg.alpha_l for c in per_column):
        raise ValueError(
            f"expected {cfg.n} columns of {cfg.alpha_l} downloaded symbols")
    check_budget(cfg.field.order ** cfg.message_length,
                 f"list decoding over {cfg.field!r}^{cfg.message_length}")
    column_points = [cfg.column_points(i, cfg.alpha_l) for i in range(cfg.n)]
    hits = []
    for message in itertools.product(cfg.field.elements(),
                                     repeat=cfg.message_length):
        h = normalize(message)
        dist = 0
        for i in range(cfg.n):
            prefix = tuple(poly_eval(cfg.field, h, x)
                           for x in column_points[i])
            if prefix != per_column[i]:
                dist += 1
                if dist > radius:
                    break
        if dist <= radius:
            hits.append(message)
    return hits


def frs_full_pipeline(cfg, message, pattern):
    """encode -> corrupt -> download -> decode, returning (message, bundle)."""
    stored = frs_encode(cfg, message)
    corrupted = apply_error_pattern(cfg.field, stored, pattern)
    bundle = frs_download_all(cfg, corrupted)
    decoded, _ = frs_decode_trial(cfg, bundle.per_column)
    return decoded, bundle


def frs_all_codewords(cfg):
    """Iterate (message, array word) over the whole code, in canonical
    message order. Budget-gated via the callers that materialize it."""
    for message in itertools.product(cfg.field.elements(),
                                     repeat=cfg.message_length):
        yield message, frs_encode(cfg, message)


def frs_download_fns(cfg, height=None):
    """Per-column download maps for collision search; height defaults to
    the scheme's prefix height alpha*l."""
    if height is None:
        height = cfg.alpha_l
    if not 0 <= height <= cfg.l:
        raise ValueError(f"height must be between 0 and l = {cfg.l}")

    def make(_i):
        return lambda column: tuple(column[:height])

    return tuple(make(i) for i in range(cfg.n))
