from math import gcd

import numpy as np
import pytest

from nafil.construct import (
    ConstructionInvalid,
    ConstructionParams,
    construct_nafil,
    counter_cyclic_transpose,
    cyclic_block,
    format_trace,
    lk_double_prime,
    lk_prime,
    starred_block,
    starred_positions,
)
from nafil.latin import Block, Table, delete_column, delete_row, is_latin, is_standard_form
from nafil.loops import associativity_witness, inverse_map

import oracles
from conftest import L5_ROWS, L9_ROWS, cyclic_rows, klein_rows


def test_cyclic_block_examples():
    assert cyclic_block(5, 4).tolist() == [
        [5, 6, 7, 8, 9], [6, 7, 8, 9, 5], [7, 8, 9, 5, 6], [8, 9, 5, 6, 7], [9, 5, 6, 7, 8],
    ]
    assert cyclic_block(1, 0).tolist() == [[1]]
    assert cyclic_block(3, 0).tolist() == [[1, 2, 3], [2, 3, 1], [3, 1, 2]]
    assert cyclic_block(5, 4).universe == frozenset(range(5, 10))


def test_counter_cyclic_transpose_examples():
    assert counter_cyclic_transpose(5).tolist() == [
        [1, 5, 4, 3, 2], [2, 1, 5, 4, 3], [3, 2, 1, 5, 4], [4, 3, 2, 1, 5], [5, 4, 3, 2, 1],
    ]
    assert counter_cyclic_transpose(2).tolist() == [[1, 2], [2, 1]]
    assert np.diag(counter_cyclic_transpose(7).entries).tolist() == [1] * 7


@pytest.mark.parametrize("k", range(2, 31))
def test_counter_cyclic_transpose_shape(k):
    b = counter_cyclic_transpose(k)
    assert b.row(1) == (1,) + tuple(range(k, 1, -1))
    where_k = {(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(b.entries == k))}
    assert where_k == set(starred_positions(k))
    assert is_latin(b)


@pytest.mark.parametrize("k", range(2, 31))
def test_counter_cyclic_transpose_is_column_permuted_cyclic_block(k):
    cyc = cyclic_block(k, 0).entries
    perm = [((1 - j) % k) + 1 for j in range(1, k + 1)]
    permuted = cyc[:, [p - 1 for p in perm]]
    assert np.array_equal(counter_cyclic_transpose(k).entries, permuted)


@pytest.mark.parametrize("k", range(2, 16))
def test_row_permuted_cyclic_block_is_the_untransposed_square(k):
    # rows 1, k, k-1, ..., 2 of the cyclic block give entry ((j - i) mod k) + 1
    cyc = cyclic_block(k, 0).entries
    order = [1] + list(range(k, 1, -1))
    rows_permuted = cyc[[o - 1 for o in order]]
    assert np.array_equal(rows_permuted.T, counter_cyclic_transpose(k).entries)


def test_starred_block_examples():
    assert starred_block(4).tolist() == [
        [1, 9, 4, 3, 2], [2, 1, 5, 4, 3], [3, 2, 1, 6, 4], [4, 3, 2, 1, 7], [8, 4, 3, 2, 1],
    ]
    ct = counter_cyclic_transpose(5).entries
    held_five = {(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(ct == 5))}
    changed = {(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(starred_block(4).entries != ct))}
    assert held_five == set(starred_positions(5))
    # (2, 3) receives m+1 = 5, the value it already held
    assert changed == held_five - {(2, 3)}


@pytest.mark.parametrize("m", range(2, 51))
def test_starred_values_use_each_label_once(m):
    k = m + 1
    star = starred_block(m)
    vals = sorted(star[p] for p in starred_positions(k))
    assert vals == list(range(m + 1, 2 * m + 2))
    # closed form: (1,2) -> n, (i,i+1) -> m+i-1, (k,1) -> 2m
    assert star[1, 2] == 2 * m + 1
    assert all(star[i, i + 1] == m + i - 1 for i in range(2, k))
    assert star[k, 1] == 2 * m


def test_lk_blocks():
    assert lk_prime(4).tolist() == [[5, 6, 7, 8, 9], [6, 7, 8, 9, 5], [7, 8, 9, 5, 6], [9, 5, 6, 7, 8]]
    assert lk_double_prime(4).tolist() == [[5, 6, 7, 8], [6, 7, 8, 9], [7, 8, 9, 5], [8, 9, 5, 6], [9, 5, 6, 7]]
    assert lk_prime(2).tolist() == [[3, 4, 5], [5, 3, 4]]
    assert lk_prime(2) == delete_row(cyclic_block(3, 2), 2)
    assert lk_double_prime(2) == delete_column(cyclic_block(3, 2), 3)


def test_golden_tables():
    assert construct_nafil(2)[0].table.tolist() == L5_ROWS
    assert construct_nafil(4)[0].table.tolist() == L9_ROWS


def test_trace_dimensions():
    for m in (2, 3, 7):
        k = m + 1
        _, tr = construct_nafil(m)
        shapes = [b.shape for b in tr.blocks().values()]
        assert shapes == [(m, m), (k, k), (m, k), (k, m), (k, k)]


def test_format_trace_headers():
    _, tr = construct_nafil(4)
    text = format_trace(tr)
    headers = [ln for ln in text.splitlines() if ln.startswith("# block:")]
    assert headers == ["# block: L(m)", "# block: L(k)", "# block: L(k)'", "# block: L(k)''", "# block: C_k^T*", "# block: table"]
    assert text.endswith("9 5 6 7 8 4 3 2 1\n")


@pytest.mark.parametrize("m", range(2, 51))
def test_family_is_nafil(m):
    loop, _ = construct_nafil(m)
    rows = loop.table.tolist()
    n = 2 * m + 1
    assert is_latin(loop.table) and is_standard_form(loop.table)
    assert oracles.find_identities(rows) == [1]
    inv = inverse_map(loop)
    assert all(inv[x] == x for x in range(m + 1, n + 1))
    assert [r[:m] for r in rows[:m]] == cyclic_rows(m)
    assert not associativity_witness(loop).holds


@pytest.mark.parametrize("m", range(2, 9))
def test_family_inverses_match_oracle(m):
    loop, _ = construct_nafil(m)
    assert inverse_map(loop).as_dict() == oracles.inverses(loop.table.tolist())


def test_m_never_divides_n():
    m = np.arange(2, 10**6 + 1)
    assert not np.any((2 * m + 1) % m == 0)
    assert all(gcd(m, 2 * m + 1) == 1 for m in range(2, 2000))


def test_params_validation():
    assert ConstructionParams(4).n == 9 and ConstructionParams(4).k == 5
    assert ConstructionParams.from_order(9).m == 4
    for bad in (1, 0, -3, 2.5, True):
        with pytest.raises(ValueError):
            ConstructionParams(bad)
    with pytest.raises(ValueError):
        ConstructionParams.from_order(8)
    with pytest.raises(ValueError, match="order"):
        ConstructionParams(3, Table(klein_rows()))
    with pytest.raises(ValueError, match="standard form"):
        ConstructionParams(3, Table([[2, 3, 1], [3, 1, 2], [1, 2, 3]]))
    with pytest.raises(ValueError, match="associative"):
        ConstructionParams(5, Table(L5_ROWS))


def test_non_cyclic_group_for_top_left():
    loop, tr = construct_nafil(ConstructionParams(4, Table(klein_rows())))
    assert [r[:4] for r in loop.table.tolist()[:4]] == klein_rows()
    assert tr.lm.tolist() == klein_rows()


def test_construction_invalid_carries_stage(monkeypatch):
    import nafil.construct as c

    broken = Block([[1, 2, 3], [2, 1, 5], [3, 2, 1]], range(1, 6))
    monkeypatch.setattr(c, "starred_block", lambda m: broken)
    with pytest.raises(ConstructionInvalid) as err:
        c.construct_nafil(2)
    assert err.value.stage == "latin"
    assert err.value.witness[0] in ("row", "column")
