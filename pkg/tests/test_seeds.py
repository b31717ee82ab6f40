"""Exchange matrices, symmetrizers, compatibility, frames, seed I/O."""

import random

import pytest

from qcluster import (
    ClassicalSeed,
    CommLaurent,
    ExchangeMatrix,
    IncompatibleError,
    NotSymmetrizableError,
    QuantumSeed,
    SkewMatrix,
    TorusElement,
    check_compatibility,
    dump_seed,
    find_skew_symmetrizer,
    lambda_mutate,
    load_seed,
    matrix_mutate,
    principal_extension,
    principal_lambda,
    specialize_seed,
)

from helpers import (
    A2_ROWS,
    A3_ROWS,
    random_exchange_matrix,
    random_principal_quantum_seed,
    random_skew,
    random_skew_symmetrizable,
)
from oracles import ref_transform

L2 = SkewMatrix([[0, 1], [-1, 0]])


# -- skew-symmetrizers --------------------------------------------------


def test_symmetrizer_skew_symmetric_is_ones():
    assert find_skew_symmetrizer(A2_ROWS) == (1, 1)
    assert find_skew_symmetrizer(A3_ROWS) == (1, 1, 1)
    assert find_skew_symmetrizer([[0]]) == (1,)


def test_symmetrizer_weighted():
    assert find_skew_symmetrizer([[0, 1], [-2, 0]]) == (2, 1)
    assert find_skew_symmetrizer([[0, 2], [-1, 0]]) == (1, 2)
    # isolated vertex scales to 1 independently
    assert find_skew_symmetrizer([[0, 0, 1], [0, 0, 0], [-2, 0, 0]]) == (2, 1, 1)


def test_symmetrizer_components_scale_independently():
    rows = [
        [0, 1, 0, 0],
        [-2, 0, 0, 0],
        [0, 0, 0, 3],
        [0, 0, -1, 0],
    ]
    assert find_skew_symmetrizer(rows) == (2, 1, 1, 3)


def test_symmetrizer_failures():
    with pytest.raises(NotSymmetrizableError):
        find_skew_symmetrizer([[0, 1], [1, 0]])
    with pytest.raises(NotSymmetrizableError):
        find_skew_symmetrizer([[0, 1], [0, 0]])
    with pytest.raises(NotSymmetrizableError):
        find_skew_symmetrizer([[1]])
    # consistent pairwise signs but inconsistent cycle ratios
    with pytest.raises(NotSymmetrizableError):
        find_skew_symmetrizer([[0, 1, -2], [-2, 0, 1], [1, -1, 0]])


def test_symmetrizer_random_generated():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 4)
        rows = random_skew_symmetrizable(rng, n)
        d = find_skew_symmetrizer(rows)
        assert all(x > 0 for x in d)
        for i in range(n):
            for j in range(n):
                assert d[i] * rows[i][j] == -d[j] * rows[j][i]


# -- exchange matrices --------------------------------------------------


def test_exchange_matrix_basics():
    b = ExchangeMatrix([[0, 1], [-1, 0], [2, -2]], ex=[0, 1])
    assert (b.m, b.n, b.ex) == (3, 2, (0, 1))
    assert b.principal() == ((0, 1), (-1, 0))
    assert b.column(0) == (0, -1, 2)
    assert b.d == (1, 1)
    assert b.position(1) == 1
    with pytest.raises(ValueError):
        b.position(2)


def test_exchange_matrix_validation():
    with pytest.raises(NotSymmetrizableError):
        ExchangeMatrix([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        ExchangeMatrix([[0, 1], [-1, 0]], ex=[1, 0])
    with pytest.raises(ValueError):
        ExchangeMatrix([[0, 1], [-1, 0]], ex=[0, 2])
    with pytest.raises(ValueError):
        ExchangeMatrix([[0, 1]], ex=[0, 1])


def test_matrix_mutate_rank2_sign_flip():
    b = ExchangeMatrix(A2_ROWS)
    assert matrix_mutate(b, 0).rows() == ((0, -1), (1, 0))


def test_matrix_mutate_a3_middle():
    b = ExchangeMatrix(A3_ROWS)
    assert matrix_mutate(b, 1).rows() == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))


def test_matrix_mutate_requires_exchangeable():
    b = ExchangeMatrix([[0], [1]], ex=[0])
    with pytest.raises(ValueError):
        matrix_mutate(b, 1)


def test_matrix_mutate_involutive_random():
    rng = random.Random(9)
    for _ in range(100):
        m = rng.randint(1, 5)
        n = rng.randint(1, m)
        b = random_exchange_matrix(rng, m, n)
        for k in b.ex:
            assert matrix_mutate(matrix_mutate(b, k), k) == b


# -- compatibility ------------------------------------------------------


def test_compatibility_examples():
    assert check_compatibility(ExchangeMatrix(A2_ROWS), L2) == (1, 1)
    b21 = ExchangeMatrix([[0], [1]], ex=[0])
    assert check_compatibility(b21, SkewMatrix([[0, -1], [1, 0]])) == (1,)


def test_compatibility_zero_lambda_fails():
    b = ExchangeMatrix(A2_ROWS)
    with pytest.raises(IncompatibleError) as info:
        check_compatibility(b, SkewMatrix([[0, 0], [0, 0]]))
    assert info.value.position == (0, 0)


def test_compatibility_off_diagonal_failure_position():
    # frozen-frozen pairing leaks into the product at (1, 0)
    b = ExchangeMatrix([[0], [1], [1]], ex=[0])
    lam = SkewMatrix([[0, -1, 0], [1, 0, 7], [0, -7, 0]])
    with pytest.raises(IncompatibleError) as info:
        check_compatibility(b, lam)
    assert info.value.position == (1, 0)


def test_compatibility_accepts_non_canonical_d():
    # a skew-symmetric principal part can still certify d != (1, 1)
    b = ExchangeMatrix([[0, 2], [-2, 0]])
    assert check_compatibility(b, L2) == (2, 2)


def test_compatibility_implies_symmetrizer_condition():
    rng = random.Random(15)
    for _ in range(30):
        n = rng.randint(1, 3)
        seed = random_principal_quantum_seed(rng, n)
        d = check_compatibility(seed.b, seed.lam)
        p = seed.b.principal()
        for i in range(n):
            for j in range(n):
                assert d[i] * p[i][j] == -d[j] * p[j][i]


# -- frame mutation -----------------------------------------------------


def test_lambda_mutate_a2():
    b = ExchangeMatrix(A2_ROWS)
    assert lambda_mutate(L2, b, 0).rows() == ((0, -1), (1, 0))


def test_lambda_mutate_nonpositive_column_negates_row_col():
    # column of direction 0 is (0, -1): no positive part
    b = ExchangeMatrix(A2_ROWS)
    lam = SkewMatrix([[0, 5], [-5, 0]])
    got = lambda_mutate(lam, b, 0)
    assert got.rows() == ((0, -5), (5, 0))


def test_lambda_mutate_matches_reference_transform():
    lam = principal_lambda(A3_ROWS)
    bp = principal_extension(A3_ROWS)
    for k in (0, 1, 2):
        cols = []
        m = 6
        for j in range(m):
            col = [0] * m
            col[j] = 1
            cols.append(col)
        ck = [0] * m
        ck[k] = -1
        for i in range(m):
            e = bp.entry(i, k)
            if e > 0:
                ck[i] += e
        cols[k] = ck
        assert [list(r) for r in lambda_mutate(lam, bp, k).rows()] == ref_transform(
            lam.rows(), cols
        )


def test_lambda_mutate_sign_choice_agrees_under_compatibility():
    rng = random.Random(25)
    for _ in range(40):
        n = rng.randint(1, 3)
        seed = random_principal_quantum_seed(rng, n)
        for k in seed.b.ex:
            pos = lambda_mutate(seed.lam, seed.b, k, positive=True)
            neg = lambda_mutate(seed.lam, seed.b, k, positive=False)
            assert pos == neg


def test_mutation_pair_preserves_compatibility_and_d():
    rng = random.Random(27)
    for _ in range(40):
        n = rng.randint(1, 3)
        seed = random_principal_quantum_seed(rng, n)
        d = seed.d
        b, lam = seed.b, seed.lam
        for _ in range(3):
            k = rng.choice(b.ex)
            lam = lambda_mutate(lam, b, k)
            b = matrix_mutate(b, k)
            assert check_compatibility(b, lam) == d


def test_lambda_mutate_involutive_with_matrix():
    rng = random.Random(33)
    for _ in range(30):
        n = rng.randint(1, 3)
        seed = random_principal_quantum_seed(rng, n)
        for k in seed.b.ex:
            lam1 = lambda_mutate(seed.lam, seed.b, k)
            b1 = matrix_mutate(seed.b, k)
            assert lambda_mutate(lam1, b1, k) == seed.lam


# -- principal frames ---------------------------------------------------


def test_principal_lambda_rank1():
    assert principal_lambda([[0]], None, [2]).rows() == ((0, -2), (2, 0))


def test_principal_lambda_a2():
    got = principal_lambda(A2_ROWS, None, [1, 1])
    assert got.rows() == (
        (0, 0, -1, 0),
        (0, 0, 0, -1),
        (1, 0, 0, -1),
        (0, 1, 1, 0),
    )


def test_principal_lambda_zero_b():
    got = principal_lambda([[0, 0], [0, 0]])
    assert got.rows() == (
        (0, 0, -1, 0),
        (0, 0, 0, -1),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
    )


def test_principal_lambda_validates_d():
    with pytest.raises(NotSymmetrizableError):
        principal_lambda([[0, 1], [-2, 0]], None, [1, 1])
    # canonical d works
    lam = principal_lambda([[0, 1], [-2, 0]])
    ext = principal_extension([[0, 1], [-2, 0]])
    assert check_compatibility(ext, lam) == (2, 1)


def test_principal_lambda_random_with_lambda0():
    rng = random.Random(35)
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = random_skew_symmetrizable(rng, n, bound=3)
        lam0 = random_skew(rng, n, bound=3)
        d = find_skew_symmetrizer(rows)
        lam = principal_lambda(rows, lam0, d)
        assert check_compatibility(principal_extension(rows), lam) == d


# -- seeds and serialization --------------------------------------------


def test_initial_seeds():
    b = ExchangeMatrix(A2_ROWS)
    s = ClassicalSeed.initial(b)
    assert s.vars == (CommLaurent.generator(2, 0), CommLaurent.generator(2, 1))
    assert s.cluster() == s.vars
    q = QuantumSeed.initial(b, L2)
    assert q.d == (1, 1)
    assert q.vars == (TorusElement.generator(L2, 0), TorusElement.generator(L2, 1))


def test_quantum_seed_zero_lambda_rejected():
    b = ExchangeMatrix(A2_ROWS)
    with pytest.raises(IncompatibleError):
        QuantumSeed.initial(b, SkewMatrix([[0, 0], [0, 0]]))


def test_specialize_seed():
    q = QuantumSeed.initial(ExchangeMatrix(A2_ROWS), L2)
    s = specialize_seed(q)
    assert s.b == q.b
    assert s.vars == (CommLaurent.generator(2, 0), CommLaurent.generator(2, 1))


def test_seed_json_round_trip():
    obj = {
        "m": 3,
        "n": 2,
        "ex": [1, 3],
        "B": [[0, 1], [1, -1], [-1, 0]],
    }
    s = load_seed(obj)
    assert isinstance(s, ClassicalSeed)
    assert s.b.ex == (0, 2)
    out = dump_seed(s)
    assert out == obj
    assert load_seed(out).b == s.b


def test_seed_json_quantum():
    obj = {
        "m": 2,
        "n": 1,
        "ex": [1],
        "B": [[0], [1]],
        "Lambda": [[0, -1], [1, 0]],
    }
    s = load_seed(obj)
    assert isinstance(s, QuantumSeed)
    assert s.d == (1,)
    out = dump_seed(s, full=True)
    assert out["d"] == [1]
    assert out["vars"] == [
        [{"exp": [1, 0], "coeff": {"0": "1"}}],
        [{"exp": [0, 1], "coeff": {"0": "1"}}],
    ]
    # dumped seed (non-full) loads back
    assert load_seed(dump_seed(s)).lam == s.lam


def test_seed_json_defaults_and_errors():
    # ex defaults to 1..n
    s = load_seed({"m": 2, "n": 2, "B": A2_ROWS})
    assert s.b.ex == (0, 1)
    with pytest.raises(ValueError):
        load_seed({"m": 2, "n": 2, "B": A2_ROWS, "vars": []})
    with pytest.raises(ValueError):
        load_seed({"m": 2, "n": 2, "B": [[0, 1]]})
    with pytest.raises(ValueError):
        load_seed({"n": 2, "B": A2_ROWS})
    with pytest.raises(ValueError):
        load_seed([1, 2])
    with pytest.raises(ValueError):
        load_seed({"m": 2, "n": 2, "B": A2_ROWS, "Lambda": [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]})


def test_seed_validation():
    b = ExchangeMatrix(A2_ROWS)
    with pytest.raises(ValueError):
        ClassicalSeed(b, (CommLaurent.generator(2, 0),))
    with pytest.raises(ValueError):
        QuantumSeed(
            SkewMatrix([[0]]),
            b,
            (TorusElement.generator(L2, 0), TorusElement.generator(L2, 1)),
            (1, 1),
        )
