"""Reed-Solomon codes: evaluation encoding, unique decoding, erasure
decoding, and a brute-force nearest-codeword search used as an oracle.

A message is the coefficient tuple of a polynomial of degree < k; the
codeword is its evaluations at n distinct points. Unique decoding follows
the extended-Euclid method: interpolate the received word, run the partial
GCD against the master root polynomial until the remainder degree drops
below (n + k) / 2, and read the message off the exact quotient.
"""

import itertools
from dataclasses import dataclass

from .budget import check_budget
from .errors import DecodeFailure, InconsistentErasures
from .polyring import (degree, interpolate, normalize, poly_divmod,
                       poly_eval, poly_from_roots, poly_mul, poly_sub)


@dataclass(frozen=True)
class RsCode:
    """An (n, k) Reed-Solomon code over `field` with evaluation points `omega`."""

    field: object
    k: int
    omega: tuple

    def __post_init__(self):
        omega = tuple(self.omega)
        object.__setattr__(self, "omega", omega)
        for w in omega:
            self.field.check(w)
        if len(set(omega)) != len(omega):
            raise ValueError("evaluation points must be distinct")
        if not 1 <= self.k <= len(omega):
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={len(omega)}")

    @property
    def n(self):
        return len(self.omega)

    @property
    def radius(self):
        """Largest number of errors unique decoding always corrects."""
        return (self.n - self.k) // 2


def rs_encode(code, message):
    """Evaluate the message polynomial at the code's points."""
    h = normalize(message)
    if degree(h) >= code.k:
        raise ValueError(f"message degree {degree(h)} >= k = {code.k}")
    for c in h:
        code.field.check(c)
    return tuple(poly_eval(code.field, h, w) for w in code.omega)


def rs_decode_unique(code, received):
    """Decode up to floor((n - k) / 2) errors.

    Returns (message, error_positions) with error_positions a frozenset.
    Raises DecodeFailure when no codeword lies within the radius; by the
    final re-encode check the result is never silently wrong.
    """
    field, n, k = code.field, code.n, code.k
    received = tuple(received)
    if len(received) != n:
        raise ValueError(f"received word has {len(received)} symbols, expected {n}")
    for c in received:
        field.check(c)

    g0 = poly_from_roots(field, code.omega)
    g1 = interpolate(field, zip(code.omega, received))
    # partial extended Euclid: track only the coefficient of g1
    r0, r1 = g0, g1
    v0, v1 = (), (1,)
    while 2 * degree(r1) >= n + k:
        quot, rem = poly_divmod(field, r0, r1)
        r0, r1 = r1, rem
        v0, v1 = v1, poly_sub(field, v0, poly_mul(field, quot, v1))
    h, rem = poly_divmod(field, r1, v1)
    if rem != () or degree(h) >= k:
        raise DecodeFailure(
            f"no codeword within {code.radius} errors of the received word")
    codeword = tuple(poly_eval(field, h, w) for w in code.omega)
    positions = frozenset(i for i in range(n) if codeword[i] != received[i])
    if len(positions) > code.radius:
        raise DecodeFailure(
            f"no codeword within {code.radius} errors of the received word")
    return h, positions


def rs_erasure_decode(code, known):
    """Recover the message from >= k error-free (position, value) pairs.

    Interpolates through the first k pairs and checks the rest; any
    disagreement raises InconsistentErasures since the inputs were claimed
    to be clean.
    """
    field = code.field
    known = [(int(pos), val) for pos, val in known]
    positions = [pos for pos, _ in known]
    if len(set(positions)) != len(positions):
        raise ValueError("duplicate positions in erasure input")
    for pos, val in known:
        if not 0 <= pos < code.n:
            raise ValueError(f"position {pos} outside codeword of length {code.n}")
        field.check(val)
    if len(known) < code.k:
        raise ValueError(f"need at least k = {code.k} clean symbols, got {len(known)}")
    head, tail = known[:code.k], known[code.k:]
    h = interpolate(field, [(code.omega[pos], val) for pos, val in head])
    for pos, val in tail:
        if poly_eval(field, h, code.omega[pos]) != val:
            raise InconsistentErasures(
                f"symbol at position {pos} is off the interpolated polynomial")
    return h


def nearest_codeword_bruteforce(code, received, radius):
    """All (message, distance) pairs with distance <= radius, by full search.

    The list is sorted by distance, ties broken by canonical message order
    (lexicographic on the padded coefficient tuple). Enumerates all q^k
    messages, so it is gated by the enumeration budget.
    """
    field, n, k = code.field, code.n, code.k
    received = tuple(received)
    if len(received) != n:
        raise ValueError(f"received word has {len(received)} symbols, expected {n}")
    for c in received:
        field.check(c)
    check_budget(field.order ** k, f"nearest-codeword search over {field!r}^{k}")
    powers = [[field.pow(w, j) for j in range(k)] for w in code.omega]
    hits = []
    for message in itertools.product(field.elements(), repeat=k):
        dist = 0
        for i in range(n):
            value = 0
            row = powers[i]
            for j in range(k):
                if message[j]:
                    value = field.add(value, field.mul(message[j], row[j]))
            if value != received[i]:
                dist += 1
                if dist > radius:
                    break
        if dist <= radius:
            hits.append((normalize(message), dist))
    hits.sort(key=lambda pair: pair[1])  # stable: canonical order within ties
    return hits
