import itertools
import random

import numpy as np
import pytest

from lcseq.core import (
    DpCapError,
    ReconstructionCapError,
    TraceTable,
    dp_oracle,
    dp_traceback,
    extract_lcs,
    lcs_length,
    lcs_reconstruct,
    lcs_vector_scan,
    validate_common_subsequence,
)
from lcseq.matching import Sequence, build_position_lists, from_text
from lcseq.threshold import BACKEND_NAMES

from helpers import brute_force_lcs_length


def rand_seq(rng, max_len, sigma):
    return Sequence(tuple(rng.randrange(sigma) for _ in range(rng.randint(0, max_len))))


@pytest.mark.parametrize("backend", BACKEND_NAMES)
def test_length_examples(backend):
    x, y = from_text("abcbdab"), from_text("bdcaba")
    assert lcs_length(x, y, backend=backend).length == 4
    a = from_text("aaaa")
    assert lcs_length(a, a, backend=backend).length == 4
    assert lcs_length(from_text("ab"), from_text("cd"), backend=backend).length == 0


def test_vector_scan_examples():
    assert lcs_vector_scan(from_text("abcbdab"), from_text("bdcaba")).length == 4
    assert lcs_vector_scan(from_text("abab"), from_text("abab")).length == 4
    # brute force over all common subsequences gives 1 here
    assert brute_force_lcs_length(from_text("ba"), from_text("ab")) == 1
    assert lcs_vector_scan(from_text("ba"), from_text("ab")).length == 1


def test_reconstruct_examples():
    x, y = from_text("abcbdab"), from_text("bdcaba")
    res = lcs_reconstruct(x, y)
    assert res.length == 4
    assert validate_common_subsequence(res.subsequence, x, y, 4)

    abc = from_text("abc")
    res = lcs_reconstruct(abc, abc)
    assert bytes(res.subsequence) == b"abc"

    res = lcs_reconstruct(from_text("a"), from_text(""))
    assert res.length == 0 and res.subsequence == ()


def test_extract_lcs_base_case():
    trace = TraceTable(predecessor=[0], column=[0], occupant=[0], row=[0])
    assert extract_lcs(trace, 0, from_text("bdcaba")) == ()


def test_extract_lcs_single_match():
    trace = TraceTable(predecessor=[0, 0], column=[0, 3], occupant=[0], row=[0, 1])
    assert bytes(extract_lcs(trace, 1, from_text("bdcaba"))) == b"c"


def test_extract_lcs_chain():
    trace = TraceTable(
        predecessor=[0, 0, 1], column=[0, 2, 5], occupant=[0], row=[0, 1, 2]
    )
    assert bytes(extract_lcs(trace, 2, from_text("bdcaba"))) == b"db"


def test_dp_oracle_examples():
    x, y = from_text("abcbdab"), from_text("bdcaba")
    table = dp_oracle(x, y)
    assert table.shape == (8, 7)
    assert table[7][6] == 4
    assert brute_force_lcs_length(x, y) == 4

    table = dp_oracle(from_text(""), from_text("abc"))
    assert (table == 0).all()

    assert dp_oracle(from_text("ab"), from_text("ab"))[2][2] == 2


def test_dp_oracle_prefix_semantics():
    rng = random.Random(4)
    x, y = rand_seq(rng, 12, 3), rand_seq(rng, 12, 3)
    table = dp_oracle(x, y)
    for i in range(len(x) + 1):
        for j in range(len(y) + 1):
            xi = Sequence(x.symbols[:i])
            yj = Sequence(y.symbols[:j])
            assert table[i][j] == brute_force_lcs_length(xi, yj)


def test_dp_traceback_is_valid():
    rng = random.Random(8)
    for _ in range(30):
        x, y = rand_seq(rng, 20, 3), rand_seq(rng, 20, 3)
        table = dp_oracle(x, y)
        sub = dp_traceback(table, x, y)
        assert validate_common_subsequence(sub, x, y, int(table[len(x)][len(y)]))


def test_exhaustive_tiny_vs_brute_force():
    alphabet = (0, 1)
    strings = [
        Sequence(s)
        for l in range(0, 5)
        for s in itertools.product(alphabet, repeat=l)
    ]
    for x in strings:
        for y in strings:
            expected = brute_force_lcs_length(x, y)
            assert int(dp_oracle(x, y)[len(x)][len(y)]) == expected
            assert lcs_length(x, y, backend="veb").length == expected


def test_random_equivalence_and_validity():
    rng = random.Random(123)
    for _ in range(120):
        sigma = rng.choice((2, 4, 26))
        x, y = rand_seq(rng, 80, sigma), rand_seq(rng, 80, sigma)
        pl = build_position_lists(y)
        expected = int(dp_oracle(x, y)[len(x)][len(y)])
        for backend in BACKEND_NAMES:
            assert lcs_length(x, y, backend=backend, position_lists=pl).length == expected
        res = lcs_reconstruct(x, y, position_lists=pl)
        assert res.length == expected
        assert validate_common_subsequence(res.subsequence, x, y, expected)


def test_symmetry_identity_monotonicity():
    rng = random.Random(55)
    for _ in range(40):
        x, y = rand_seq(rng, 40, 3), rand_seq(rng, 40, 3)
        lxy = lcs_length(x, y).length
        assert lcs_length(y, x).length == lxy
        assert lcs_length(x, x).length == len(x)
        grown = Sequence(x.symbols + (rng.randrange(3),))
        assert lcs_length(grown, y).length >= lxy
        grown_y = Sequence(y.symbols + (rng.randrange(3),))
        assert lcs_length(x, grown_y).length >= lxy


def test_threshold_contents_match_dp_minima():
    """Final S(t) is the smallest j whose prefix of Y reaches LCS rank t."""
    rng = random.Random(77)
    for _ in range(40):
        x, y = rand_seq(rng, 50, 3), rand_seq(rng, 50, 3)
        from lcseq.threshold import make_threshold_set

        pl = build_position_lists(y)
        ts = make_threshold_set(max(len(y), 1), "veb")
        for sym in x.symbols:
            for j in pl.positions(sym):
                ts.update(j)
        table = dp_oracle(x, y)
        final_row = table[len(x)]
        contents = ts.contents()
        assert len(contents) == int(final_row[len(y)])
        for t, s_t in enumerate(contents, start=1):
            assert s_t == min(j for j in range(len(y) + 1) if final_row[j] == t)


def test_operation_accounting():
    rng = random.Random(31)
    for _ in range(40):
        x, y = rand_seq(rng, 60, 2), rand_seq(rng, 60, 2)
        res = lcs_length(x, y, backend="veb")
        c = res.counters
        assert c.structure_total() <= 4 * res.stats.r
        assert c.delete <= c.insert
        recon = lcs_reconstruct(x, y)
        c = recon.counters
        assert c.structure_total() <= 4 * recon.stats.r
        assert c.delete <= c.insert


def test_chain_geometry():
    rng = random.Random(41)
    for _ in range(40):
        x, y = rand_seq(rng, 50, 2), rand_seq(rng, 50, 2)
        res = lcs_reconstruct(x, y)
        trace = res.trace
        if trace is None:
            continue
        for k in range(1, trace.count + 1):
            p = trace.predecessor[k]
            if p:
                assert trace.column[p] < trace.column[k]
                assert trace.row[p] < trace.row[k]


def test_reconstruction_memory_cap():
    x, y = from_text("aaaa"), from_text("aaaa")
    with pytest.raises(ReconstructionCapError) as exc:
        lcs_reconstruct(x, y, memory_cap=8)
    assert exc.value.r == 16


def test_dp_cap():
    x = Sequence(tuple(range(100)))
    with pytest.raises(DpCapError):
        dp_oracle(x, x, cap=1000)


def test_empty_inputs_short_circuit():
    empty = from_text("")
    res = lcs_length(empty, from_text("abc"))
    assert res.length == 0 and res.counters.update == 0
    res = lcs_length(from_text("abc"), empty)
    assert res.length == 0


def test_array_row_costs_exposed():
    x, y = from_text("abcbdab"), from_text("bdcaba")
    res = lcs_length(x, y, backend="array")
    assert res.row_costs is not None
    total_updates = sum(rc.updates for rc in res.row_costs)
    assert total_updates == res.stats.r
    for rc in res.row_costs:
        assert rc.comparisons <= rc.alpha_start + rc.updates + 1
