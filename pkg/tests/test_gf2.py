from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golay24 import reference
from golay24.builder import SPC_GENERATOR, REPETITION_GENERATOR
from golay24.gf2 import (
    BitMatrix,
    BitVector,
    GF2Error,
    enumerate_codebook,
    in_row_space,
    kronecker,
    min_distance,
    rank,
    row_space_equal,
    weight_distribution,
)


def to_array(m: BitMatrix) -> np.ndarray:
    return np.array([list(r) for r in m], dtype=np.uint8)


def rank_oracle(a: np.ndarray) -> int:
    """Plain Gaussian elimination on a 0/1 array."""
    a = a.copy() % 2
    r = 0
    for c in range(a.shape[1]):
        pivots = np.nonzero(a[r:, c])[0]
        if not len(pivots):
            continue
        p = r + pivots[0]
        a[[r, p]] = a[[p, r]]
        for i in range(a.shape[0]):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
        if r == a.shape[0]:
            break
    return r


matrices_4x8 = st.lists(st.integers(0, 255), min_size=4, max_size=4).map(lambda v: BitMatrix.from_ints(v, 8))


class TestBitVector:
    def test_leftmost_symbol_is_index_zero(self):
        v = BitVector.from_string("10111000")
        assert list(v) == [1, 0, 1, 1, 1, 0, 0, 0]
        assert v[0] == 1 and v[1] == 0
        assert str(v) == "10111000"

    def test_spaces_allowed(self):
        assert BitVector.from_string("1 0 1 1") == BitVector.from_string("1011")

    @pytest.mark.parametrize("bad", ["", "102", "ab"])
    def test_rejects_non_binary(self, bad):
        with pytest.raises(GF2Error):
            BitVector.from_string(bad)

    def test_length_mismatch(self):
        with pytest.raises(GF2Error):
            BitVector.from_string("101") + BitVector.from_string("1010")

    @given(st.integers(1, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1))))
    def test_addition_is_self_inverse(self, nv):
        n, value = nv
        v = BitVector(n, value)
        assert v + v == BitVector.zeros(n)
        assert v + v.complement() == BitVector.ones(n)

    def test_concat_and_split(self):
        a, b = BitVector.from_string("1100"), BitVector.from_string("0011")
        assert str(a.concat(b)) == "11000011"
        assert a.concat(b).split(4) == [a, b]


class TestMatrixFormat:
    def test_round_trip(self):
        text = reference.EXAMPLE_G1.format()
        assert BitMatrix.parse(text) == reference.EXAMPLE_G1

    def test_comments_spaces_and_missing_trailing_newline(self):
        text = "# seed\n1 0 0 0 1 1 0 1\n01000111\n# end\n00101110\n0 0 0 1 1 0 1 1"
        assert BitMatrix.parse(text) == reference.EXAMPLE_G1

    @pytest.mark.parametrize("text", ["10  01\n", "1021\n", "101\n11\n"])
    def test_malformed(self, text):
        with pytest.raises(GF2Error):
            BitMatrix.parse(text)


class TestKronecker:
    def test_spc_times_seed_block_form(self):
        g1 = reference.EXAMPLE_G1
        zero = BitMatrix.from_ints([0] * 4, 8)
        expected = g1.hstack(zero, g1).vstack(zero.hstack(g1, g1))
        assert kronecker(SPC_GENERATOR, g1) == expected

    def test_identity(self):
        assert kronecker(BitMatrix.identity(1), reference.EXAMPLE_G1) == reference.EXAMPLE_G1

    def test_repetition_row(self):
        g = reference.EXAMPLE_G7
        assert kronecker(REPETITION_GENERATOR, g) == g.hstack(g, g)

    @given(
        st.integers(1, 3), st.integers(1, 4), st.integers(1, 3), st.integers(1, 4), st.data()
    )
    def test_dimension_law_and_blocks(self, ra, ca, rb, cb, data):
        a = BitMatrix.from_ints(data.draw(st.lists(st.integers(0, 2**ca - 1), min_size=ra, max_size=ra)), ca)
        b = BitMatrix.from_ints(data.draw(st.lists(st.integers(0, 2**cb - 1), min_size=rb, max_size=rb)), cb)
        k = kronecker(a, b)
        assert k.shape == (ra * rb, ca * cb)
        ka, aa, ba = to_array(k), to_array(a), to_array(b)
        assert np.array_equal(ka, np.kron(aa, ba))


class TestRank:
    def test_identity(self):
        assert rank(BitMatrix.identity(4)) == 4

    def test_zero(self):
        assert rank(BitMatrix.from_ints([0] * 4, 8)) == 0

    def test_example_golay_generator(self, golay):
        assert rank(golay.generator) == rank_oracle(to_array(golay.generator)) == 12

    @settings(max_examples=200)
    @given(st.integers(1, 8), st.integers(1, 12), st.data())
    def test_matches_oracle(self, rows, cols, data):
        m = BitMatrix.from_ints(data.draw(st.lists(st.integers(0, 2**cols - 1), min_size=rows, max_size=rows)), cols)
        assert rank(m) == rank_oracle(to_array(m))


class TestRowSpace:
    def test_row_permutation(self):
        g = reference.EXAMPLE_G1
        assert row_space_equal(g, BitMatrix(g.rows[::-1], 8))

    def test_turyn_seed(self):
        assert row_space_equal(reference.EXAMPLE_G1, reference.TURYN_G)

    def test_seed_vs_first_companion(self, family):
        g1p = family[0].companion.generator
        # codebook comparison as the independent route
        assert set(enumerate_codebook(reference.EXAMPLE_G1)) != set(enumerate_codebook(g1p))
        assert not row_space_equal(reference.EXAMPLE_G1, g1p)

    def test_column_mismatch(self):
        with pytest.raises(GF2Error):
            row_space_equal(BitMatrix.identity(4), BitMatrix.identity(5))

    @given(matrices_4x8, matrices_4x8, matrices_4x8)
    def test_equivalence_relation(self, a, b, c):
        assert row_space_equal(a, a)
        assert row_space_equal(a, b) == row_space_equal(b, a)
        if row_space_equal(a, b) and row_space_equal(b, c):
            assert row_space_equal(a, c)

    @given(matrices_4x8, st.permutations(range(4)), st.integers(0, 3), st.integers(0, 3))
    def test_row_operations_preserve_space(self, m, perm, i, j):
        rows = [m.rows[k] for k in perm]
        if i != j:
            rows[i] = rows[i] + rows[j]
        assert row_space_equal(m, BitMatrix(tuple(rows), 8))

    @given(matrices_4x8)
    def test_agrees_with_codebook_sets(self, m):
        other = reference.EXAMPLE_G1
        same = set(enumerate_codebook(m)) == set(enumerate_codebook(other))
        assert row_space_equal(m, other) == same

    def test_membership(self):
        assert in_row_space(reference.EXAMPLE_G1, BitVector.from_string("10111000"))
        assert not in_row_space(reference.EXAMPLE_G1, BitVector.from_string("11110000"))


class TestEnumeration:
    def test_sizes(self, golay):
        assert len(enumerate_codebook(reference.EXAMPLE_G1)) == 16
        assert len(enumerate_codebook(golay.generator)) == 4096

    def test_contains_29(self):
        assert BitVector.from_string("10111000") in enumerate_codebook(reference.EXAMPLE_G1)

    def test_dependent_rows_collapse(self):
        g = BitMatrix.from_rows(["1100", "0011", "1111"])
        assert len(enumerate_codebook(g)) == 4

    def test_cap(self):
        with pytest.raises(GF2Error):
            enumerate_codebook(BitMatrix.identity(21))

    def test_weight_distributions(self, golay):
        assert weight_distribution(reference.EXAMPLE_G1) == {0: 1, 4: 14, 8: 1}
        assert weight_distribution(reference.EXAMPLE_G7) == {0: 1, 4: 14, 8: 1}
        assert weight_distribution(golay.generator) == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}

    @given(matrices_4x8)
    def test_distribution_sums_to_codebook(self, m):
        assert sum(weight_distribution(m).values()) == 2 ** rank(m)


class TestMinDistance:
    def test_values(self, golay):
        assert min_distance(reference.EXAMPLE_G1) == 4
        assert min_distance(golay.generator) == 8
        assert min_distance(SPC_GENERATOR) == 2

    def test_zero_matrix(self):
        with pytest.raises(GF2Error):
            min_distance(BitMatrix.from_ints([0, 0], 4))

    @given(matrices_4x8.filter(lambda m: not m.is_zero()))
    def test_matches_pairwise_brute_force(self, m):
        words = {w.value for w in enumerate_codebook(m)}
        pairwise = min((a ^ b).bit_count() for a, b in combinations(words, 2))
        assert min_distance(m) == pairwise

    def test_all_seed_orderings(self):
        from golay24.component import all_parity_orderings, build_systematic

        for p in all_parity_orderings():
            g = build_systematic(p).generator
            words = [w.value for w in enumerate_codebook(g)]
            assert min_distance(g) == min((a ^ b).bit_count() for a, b in combinations(words, 2)) == 4
