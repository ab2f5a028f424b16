"""Trace-projection scheme tests: config validation, the download and
peeling identities, radius sweeps, and accounting."""

import itertools
from fractions import Fraction

import pytest

from fracdec import polyring as P
from fracdec.arraycode import DownloadBundle, ErrorPattern, apply_error_pattern
from fracdec.errors import DecodeFailure
from fracdec.harness import random_column_offset, random_message, trial_stream
from fracdec.rs import RsCode, rs_erasure_decode
from fracdec.trace_scheme import (ts_all_codewords, ts_decode,
                                  ts_decode_message, ts_download,
                                  ts_download_all, ts_download_fns, ts_encode,
                                  ts_full_pipeline, ts_make_config,
                                  ts_project_polys)


def reference_config():
    return ts_make_config(13, 12, 4, 4, 2)


def tiny_config():
    return ts_make_config(5, 4, 2, 2, 2)


def pattern_from_stream(cfg, stream, support):
    values = tuple(random_column_offset(cfg, stream) for _ in support)
    return ErrorPattern(support=tuple(support), values=values)


def test_make_config_reference_values():
    cfg = reference_config()
    assert cfg.alpha == Fraction(1, 2)
    assert cfg.omega == tuple(range(12))
    assert cfg.subsets == ((0, 1), (2, 3))
    assert cfg.annihilators[0] == (0, 12, 1)      # x^2 + 12x
    assert cfg.annihilators[1] == (6, 8, 1)       # x^2 + 8x + 6
    assert cfg.radius == 2
    assert cfg.inner_code.k == 8
    assert cfg.downloaded_per_word == 24
    assert cfg.accessed_per_word == 48


def test_make_config_rejections():
    with pytest.raises(ValueError):
        ts_make_config(13, 12, 3, 4, 2)           # m does not divide k
    with pytest.raises(ValueError):
        ts_make_config(11, 12, 4, 4, 2)           # q < n
    with pytest.raises(ValueError):
        ts_make_config(12, 12, 4, 4, 2)           # q not prime
    with pytest.raises(ValueError):
        ts_make_config(13, 12, 4, 4, 5)           # m > l
    with pytest.raises(ValueError):
        ts_make_config(13, 12, 8, 4, 2)           # lk/m = 16 > n
    with pytest.raises(ValueError):
        ts_make_config(13, 12, 4, 4, 2, omega=(0,) * 12)   # repeated points
    with pytest.raises(ValueError):
        ts_make_config(13, 12, 4, 4, 2, subsets=((0, 1), (1, 2)))  # overlap
    with pytest.raises(ValueError):
        ts_make_config(13, 12, 4, 4, 2, subsets=((0,), (1,)))      # wrong size


def test_encode_shape_and_membership():
    """Columns reconstruct to symbols of a degree < k polynomial: any k
    columns interpolate to a polynomial matching all n."""
    cfg = reference_config()
    stream = trial_stream(11, 0, 0)
    for _ in range(5):
        msg = random_message(cfg, stream)
        word = ts_encode(cfg, msg)
        assert len(word) == cfg.n and all(len(c) == cfg.l for c in word)
        symbols = [cfg.basis.reconstruct(col) for col in word]
        pairs = [(cfg.omega[i], symbols[i]) for i in range(cfg.n)]
        h = rs_erasure_decode(RsCode(cfg.ext, cfg.k, cfg.omega), pairs)
        assert h == P.normalize(msg)


def test_encode_zero_and_constant():
    cfg = reference_config()
    zero = ts_encode(cfg, (0,) * 4)
    assert zero == ((0,) * 4,) * 12
    const = ts_encode(cfg, (17, 0, 0, 0))
    assert all(col == cfg.basis.project(17) for col in const)


def test_encode_validation():
    cfg = reference_config()
    with pytest.raises(ValueError):
        ts_encode(cfg, (1, 2, 3))
    with pytest.raises(ValueError):
        ts_encode(cfg, (1, 2, 3, cfg.ext.order))


def test_project_polys_reassemble():
    """Reassembling coefficientwise with nu recovers the message, and each
    stack of column coordinates evaluates h_u."""
    cfg = reference_config()
    stream = trial_stream(12, 0, 0)
    for _ in range(5):
        msg = random_message(cfg, stream)
        hs = ts_project_polys(cfg, msg)
        assert all(P.degree(h) < cfg.k for h in hs)
        for i, coeff in enumerate(msg):
            coords = tuple(hs[u][i] if i < len(hs[u]) else 0
                           for u in range(cfg.l))
            assert cfg.basis.reconstruct(coords) == coeff
        word = ts_encode(cfg, msg)
        for i, w in enumerate(cfg.omega):
            for u in range(cfg.l):
                assert P.poly_eval(cfg.base, hs[u], w) == word[i][u]


def build_stream_poly(cfg, msg, j):
    """g_j built symbolically from the coordinate polynomials."""
    hs = ts_project_polys(cfg, msg)
    base, l, m = cfg.base, cfg.l, cfg.m
    pj = cfg.annihilators[j]
    g = P.poly_mul(base, hs[l - m + j], P.poly_pow(base, pj, l - m))
    for u in range(l - m):
        g = P.poly_add(base, g, P.poly_mul(base, hs[u],
                                           P.poly_pow(base, pj, u)))
    return g


def test_download_identity():
    """Downloaded symbol j from a clean column i equals g_j(omega_i), with
    deg g_j below the inner dimension."""
    for cfg in (reference_config(), ts_make_config(17, 10, 4, 4, 2)):
        stream = trial_stream(13, 0, 0)
        for _ in range(20):
            msg = random_message(cfg, stream)
            word = ts_encode(cfg, msg)
            for j in range(cfg.m):
                g = build_stream_poly(cfg, msg, j)
                assert P.degree(g) < cfg.inner_code.k
                for i, w in enumerate(cfg.omega):
                    assert ts_download(cfg, word[i], i)[j] == \
                        P.poly_eval(cfg.base, g, w)


def test_download_at_annihilator_roots():
    """Where p_j vanishes, the download exposes the bottom coordinate."""
    cfg = reference_config()
    stream = trial_stream(14, 0, 0)
    msg = random_message(cfg, stream)
    word = ts_encode(cfg, msg)
    hs = ts_project_polys(cfg, msg)
    for j, subset in enumerate(cfg.subsets):
        for w in subset:
            i = cfg.omega.index(w)
            assert ts_download(cfg, word[i], i)[j] == \
                P.poly_eval(cfg.base, hs[0], w)
            assert ts_download(cfg, word[i], i)[j] == word[i][0]


def test_download_zero_column():
    cfg = reference_config()
    assert ts_download(cfg, (0,) * 4, 3) == (0, 0)


def test_peeling_identity():
    """After s exact peels, g_j^(s) agrees with h_s on A_j."""
    cfg = reference_config()
    base = cfg.base
    stream = trial_stream(15, 0, 0)
    for _ in range(10):
        msg = random_message(cfg, stream)
        hs = ts_project_polys(cfg, msg)
        streams = [build_stream_poly(cfg, msg, j) for j in range(cfg.m)]
        for s in range(cfg.l - cfg.m):
            for j in range(cfg.m):
                for w in cfg.subsets[j]:
                    assert P.poly_eval(base, streams[j], w) == \
                        P.poly_eval(base, hs[s], w)
            for j in range(cfg.m):
                quot, rem = P.poly_divmod(
                    base, P.poly_sub(base, streams[j], hs[s]),
                    cfg.annihilators[j])
                assert rem == ()
                streams[j] = quot
        for j in range(cfg.m):
            assert streams[j] == hs[cfg.l - cfg.m + j]


def test_roundtrip_all_weight_one_supports():
    cfg = reference_config()
    stream = trial_stream(16, 1, 0)
    msg = random_message(cfg, stream)
    for i in range(cfg.n):
        pattern = pattern_from_stream(cfg, stream, (i,))
        decoded, bundle = ts_full_pipeline(cfg, msg, pattern)
        assert decoded == msg
        assert bundle.downloaded == 24 and bundle.accessed == 48


def test_roundtrip_weight_two_sampled_supports():
    """A slice of the exhaustive radius sweep; the full 66-support sweep
    runs in the acceptance suite."""
    cfg = reference_config()
    stream = trial_stream(17, 2, 0)
    supports = list(itertools.combinations(range(cfg.n), 2))[::5]
    for support in supports:
        msg = random_message(cfg, stream)
        pattern = pattern_from_stream(cfg, stream, support)
        decoded, _ = ts_full_pipeline(cfg, msg, pattern)
        assert decoded == msg


def test_decode_returns_stored_array():
    cfg = reference_config()
    stream = trial_stream(18, 2, 0)
    msg = random_message(cfg, stream)
    stored = ts_encode(cfg, msg)
    pattern = pattern_from_stream(cfg, stream, (4, 9))
    corrupted = apply_error_pattern(cfg.base, stored, pattern)
    assert ts_decode(cfg, ts_download_all(cfg, corrupted)) == stored


def test_beyond_radius_never_silently_wrong_within_radius_claim():
    """Weight radius+1 patterns either fail, miscorrect detectably (the
    result differs from the message), or decode correctly by luck; at least
    one non-success must show up across the sample."""
    cfg = reference_config()
    stream = trial_stream(19, 3, 0)
    outcomes = set()
    for trial in range(40):
        msg = random_message(cfg, stream)
        support = stream.sample(cfg.n, 3)
        pattern = pattern_from_stream(cfg, stream, support)
        try:
            decoded, _ = ts_full_pipeline(cfg, msg, pattern)
            outcomes.add("ok" if decoded == msg else "wrong")
        except DecodeFailure:
            outcomes.add("fail")
    assert "fail" in outcomes or "wrong" in outcomes


def test_malformed_bundle_rejected():
    cfg = reference_config()
    good = ts_download_all(cfg, ts_encode(cfg, (0,) * 4))
    with pytest.raises(ValueError):
        ts_decode_message(cfg, DownloadBundle(
            per_column=good.per_column[:-1], downloaded=22, accessed=44))
    with pytest.raises(ValueError):
        ts_decode_message(cfg, DownloadBundle(
            per_column=tuple(c[:1] for c in good.per_column),
            downloaded=12, accessed=48))


def test_m_equals_l_degenerates_to_plain_decoding():
    """m = l means full download; alpha = 1 and the classical radius."""
    cfg = ts_make_config(13, 12, 4, 4, 4)
    assert cfg.alpha == 1 and cfg.radius == 4
    stream = trial_stream(20, 4, 0)
    msg = random_message(cfg, stream)
    pattern = pattern_from_stream(cfg, stream, (0, 3, 7, 11))
    decoded, bundle = ts_full_pipeline(cfg, msg, pattern)
    assert decoded == msg
    assert bundle.downloaded == bundle.accessed == 48


def test_m_one_deepest_peeling():
    cfg = ts_make_config(13, 12, 3, 4, 1)
    assert cfg.inner_code.k == 12 and cfg.radius == 0
    stream = trial_stream(21, 0, 0)
    msg = random_message(cfg, stream)
    decoded, _ = ts_full_pipeline(cfg, msg,
                                  ErrorPattern(support=(), values=()))
    assert decoded == msg


def test_annihilator_subsets_may_overlap_omega():
    """Default subsets sit inside omega; the identity still holds and
    decoding works (checked at the subset points directly too)."""
    cfg = reference_config()
    assert set(cfg.subsets[0]) | set(cfg.subsets[1]) <= set(cfg.omega)
    stream = trial_stream(22, 2, 0)
    msg = random_message(cfg, stream)
    pattern = pattern_from_stream(cfg, stream, (0, 2))  # inside the subsets
    decoded, _ = ts_full_pipeline(cfg, msg, pattern)
    assert decoded == msg


def test_disjoint_subsets_outside_omega_also_work():
    cfg = ts_make_config(17, 10, 4, 4, 2, subsets=((13, 14), (15, 16)))
    stream = trial_stream(23, 1, 0)
    msg = random_message(cfg, stream)
    pattern = pattern_from_stream(cfg, stream, (5,))
    decoded, _ = ts_full_pipeline(cfg, msg, pattern)
    assert decoded == msg


def test_all_codewords_enumeration():
    cfg = tiny_config()
    words = list(ts_all_codewords(cfg))
    assert len(words) == cfg.ext.order ** cfg.k == 625
    seen = {word for _, word in words}
    assert len(seen) == 625   # encoding is injective


def test_download_fns_restriction():
    cfg = tiny_config()
    fns_full = ts_download_fns(cfg)
    fns_one = ts_download_fns(cfg, count=1)
    word = ts_encode(cfg, (7, 12))
    for i in range(cfg.n):
        assert fns_full[i](word[i]) == ts_download(cfg, word[i], i)
        assert fns_one[i](word[i]) == ts_download(cfg, word[i], i)[:1]
    with pytest.raises(ValueError):
        ts_download_fns(cfg, count=3)
