import itertools
import random

import pytest

from nafil import Loop, Table, construct_nafil

# Transcribed from the printed order-5 and order-9 Cayley tables.
L5_ROWS = [
    [1, 2, 3, 4, 5],
    [2, 1, 5, 3, 4],
    [3, 4, 1, 5, 2],
    [4, 5, 2, 1, 3],
    [5, 3, 4, 2, 1],
]

L9_ROWS = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9],
    [2, 3, 4, 1, 6, 7, 8, 9, 5],
    [3, 4, 1, 2, 7, 8, 9, 5, 6],
    [4, 1, 2, 3, 9, 5, 6, 7, 8],
    [5, 6, 7, 8, 1, 9, 4, 3, 2],
    [6, 7, 8, 9, 2, 1, 5, 4, 3],
    [7, 8, 9, 5, 3, 2, 1, 6, 4],
    [8, 9, 5, 6, 4, 3, 2, 1, 7],
    [9, 5, 6, 7, 8, 4, 3, 2, 1],
]


def cyclic_rows(n):
    return [[(i + j) % n + 1 for j in range(n)] for i in range(n)]


def klein_rows():
    return [[(i ^ j) + 1 for j in range(4)] for i in range(4)]


def direct_product_rows(a, b):
    na, nb = len(a), len(b)
    label = lambda i, j: i * nb + j
    rows = []
    for i1, j1 in itertools.product(range(na), range(nb)):
        rows.append([label(a[i1][i2] - 1, b[j1][j2] - 1) + 1 for i2, j2 in itertools.product(range(na), range(nb))])
    return rows


def permutation_group_rows(gens):
    """Cayley table of the group generated by permutations (tuples), identity first."""
    n = len(gens[0])
    ident = tuple(range(n))
    compose = lambda p, q: tuple(p[q[i]] for i in range(n))
    elems = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                c = compose(g, h)
                if c not in elems:
                    elems.append(c)
                    nxt.append(c)
        frontier = nxt
    index = {g: i for i, g in enumerate(elems)}
    return [[index[compose(g, h)] + 1 for h in elems] for g in elems]


def relabel(rows, perm):
    """Apply a bijection of labels (dict) to a Cayley table and reorder rows/cols."""
    n = len(rows)
    inv = {v: k for k, v in perm.items()}
    return [[perm[rows[inv[i] - 1][inv[j] - 1]] for j in range(1, n + 1)] for i in range(1, n + 1)]


def group_corpus():
    s3 = permutation_group_rows([(1, 0, 2), (1, 2, 0)])
    d4 = permutation_group_rows([(1, 2, 3, 0), (3, 2, 1, 0)])
    a4 = permutation_group_rows([(1, 2, 0, 3), (0, 2, 3, 1)])
    q8 = _quaternion_rows()
    groups = {f"C{n}": cyclic_rows(n) for n in range(1, 13)}
    groups.update({
        "V4": klein_rows(),
        "S3": s3,
        "D4": d4,
        "Q8": q8,
        "A4": a4,
        "C2xC4": direct_product_rows(cyclic_rows(2), cyclic_rows(4)),
        "C3xC3": direct_product_rows(cyclic_rows(3), cyclic_rows(3)),
        "C2xC2xC2": direct_product_rows(klein_rows(), cyclic_rows(2)),
        "D6": permutation_group_rows([(1, 2, 3, 4, 5, 0), (5, 4, 3, 2, 1, 0)]),
    })
    return groups


def _quaternion_rows():
    # elements as (sign, unit) with units 1, i, j, k
    mult = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elems = [(s, u) for s in (1, -1) for u in range(4)]
    index = {g: i for i, g in enumerate(elems)}
    rows = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = mult[(u1, u2)]
            row.append(index[(s * s1 * s2, u)] + 1)
        rows.append(row)
    return rows


def random_group_tables(count, seed=0, max_order=12):
    """Random relabelings of the group corpus (identity not necessarily 1)."""
    rng = random.Random(seed)
    pool = [rows for rows in group_corpus().values() if len(rows) <= max_order]
    out = []
    for _ in range(count):
        rows = rng.choice(pool)
        labels = list(range(1, len(rows) + 1))
        rng.shuffle(labels)
        out.append(relabel(rows, dict(zip(range(1, len(rows) + 1), labels))))
    return out


def random_isotope(rows, rng):
    """Permute rows, columns and symbols independently: Latin, usually not a group."""
    n = len(rows)
    r, c, s = (rng.sample(range(n), n) for _ in range(3))
    return [[s[rows[r[i]][c[j]] - 1] + 1 for j in range(n)] for i in range(n)]


@pytest.fixture(scope="session")
def l5():
    return Loop(Table(L5_ROWS))


@pytest.fixture(scope="session")
def l9():
    return Loop(Table(L9_ROWS))


@pytest.fixture(scope="session")
def groups():
    return group_corpus()


@pytest.fixture(scope="session")
def constructed():
    return {m: construct_nafil(m)[0] for m in range(2, 21)}


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, text in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {text}")
