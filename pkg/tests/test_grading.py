import pytest

from colourgl.grading import (
    REGIONS,
    GradedSignature,
    all_signatures,
    classify_region,
    dot22,
    pair_degree,
    pair_degree22,
    z2_degree,
    z22_degree,
)


def test_parse_and_format():
    sig = GradedSignature.parse("1,2|0,3")
    assert (sig.m1, sig.m2, sig.n1, sig.n2) == (1, 2, 0, 3)
    assert (sig.m, sig.n, sig.r) == (3, 3, 6)
    assert str(sig) == "1,2|0,3"
    assert GradedSignature.parse(" 0 , 1 | 1 , 0 ") == GradedSignature(0, 1, 1, 0)


@pytest.mark.parametrize("text", ["", "1,1,1,1", "1|1", "a,b|c,d", "-1,1|1,1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        GradedSignature.parse(text)


def test_empty_signature_rejected():
    with pytest.raises(ValueError):
        GradedSignature(0, 0, 0, 0)
    with pytest.raises(ValueError):
        GradedSignature(1, -1, 1, 1)


def test_all_signatures_counts():
    # number of 4-compositions of r with zero parts is C(r+3, 3)
    assert [sum(1 for s in all_signatures(r, r)) for r in range(1, 6)] == [4, 10, 20, 35, 56]
    assert sum(1 for _ in all_signatures(5)) == 125


@pytest.mark.parametrize(
    "sig, i, expected",
    [((1, 1, 1, 1), 2, 0), ((1, 1, 1, 1), 3, 1), ((2, 0, 0, 0), 1, 0)],
)
def test_z2_degree(sig, i, expected):
    assert z2_degree(GradedSignature(*sig), i) == expected


@pytest.mark.parametrize(
    "sig, i, expected",
    [((1, 1, 1, 1), 2, (1, 1)), ((1, 1, 1, 1), 4, (0, 1)), ((0, 2, 1, 0), 1, (1, 1)),
     ((1, 1, 1, 1), 1, (0, 0)), ((1, 1, 1, 1), 3, (1, 0))],
)
def test_z22_degree(sig, i, expected):
    assert z22_degree(GradedSignature(*sig), i) == expected


@pytest.mark.parametrize("i", [0, 5, -1])
def test_index_out_of_range(sig1111, i):
    with pytest.raises(IndexError):
        z2_degree(sig1111, i)
    with pytest.raises(IndexError):
        z22_degree(sig1111, i)
    with pytest.raises(IndexError):
        classify_region(sig1111, 1, i)


def test_dot_and_pair_degree(sig1111):
    assert dot22((1, 0), (0, 1)) == 0
    assert dot22((1, 0), (1, 0)) == 1
    assert dot22((1, 1), (1, 0)) == 1
    assert pair_degree22(sig1111, 1, 3) == (1, 0)
    assert pair_degree22(sig1111, 4, 1) == (0, 1)


@pytest.mark.parametrize("ij, label", [((1, 2), "a"), ((2, 3), "b"), ((4, 1), "g"), ((3, 4), "c"),
                                       ((1, 4), "d"), ((3, 2), "e"), ((4, 3), "f"), ((4, 4), "a")])
def test_regions_1111(sig1111, ij, label):
    assert classify_region(sig1111, *ij) == label


def _region_predicates(sig, i, j):
    m, m_n1, r = sig.m, sig.m + sig.n1, sig.r
    lo = lambda x: 1 <= x <= m
    mid = lambda x: m < x <= m_n1
    hi = lambda x: m_n1 < x <= r
    return {
        "a": (lo(i) and lo(j)) or (mid(i) and mid(j)) or (hi(i) and hi(j)),
        "b": lo(i) and mid(j),
        "c": mid(i) and hi(j),
        "d": lo(i) and hi(j),
        "e": mid(i) and lo(j),
        "f": hi(i) and mid(j),
        "g": hi(i) and lo(j),
    }


def test_regions_partition_exhaustively():
    for sig in all_signatures(8):
        for i in sig.indices():
            for j in sig.indices():
                preds = _region_predicates(sig, i, j)
                holding = [k for k, v in preds.items() if v]
                assert holding == [classify_region(sig, i, j)]
                assert holding[0] in REGIONS


def test_self_dot_is_z2_parity():
    for sig in all_signatures(8):
        for i in sig.indices():
            for j in sig.indices():
                d = pair_degree22(sig, i, j)
                assert dot22(d, d) == pair_degree(sig, i, j)


def test_degree_blocks_match_boundaries():
    for sig in all_signatures(8):
        expected = [(0, 0)] * sig.m1 + [(1, 1)] * sig.m2 + [(1, 0)] * sig.n1 + [(0, 1)] * sig.n2
        assert [z22_degree(sig, i) for i in sig.indices()] == expected
        assert [z2_degree(sig, i) for i in sig.indices()] == [0] * sig.m + [1] * sig.n
