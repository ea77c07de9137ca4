import random

import pytest

from motzkin_multisegments import (
    InvalidPathError,
    MotzkinPath,
    ParseError,
    concat_paths,
    desuspend_path,
    enumerate_paths,
    factorize_path,
    motzkin_number,
    parse_path,
    random_path,
    serialize_path,
    suspend_path,
)
from motzkin_multisegments.motzkin import (
    EMPTY_PATH,
    FLAT_STEP,
    is_primitive_path,
    iter_paths,
    rank_path,
    unrank_path,
)

from oracles import paths_by_steps

H = MotzkinPath.of
MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634]


class TestParse:
    @pytest.mark.parametrize(
        "text, heights",
        [
            ("heights:0", (0,)),
            ("steps:UFD", (0, 1, 1, 0)),
            ("steps:", (0,)),
            ("0,1,0", (0, 1, 0)),
            (" heights: 0, 0 ", (0, 0)),
        ],
    )
    def test_valid(self, text, heights):
        assert parse_path(text).heights == heights

    @pytest.mark.parametrize("text", ["heights:0,1,2,1", "heights:0,2,0", "steps:D U", "steps:DU"])
    def test_invalid_path(self, text):
        with pytest.raises((InvalidPathError, ParseError)):
            parse_path(text)

    def test_nonzero_endpoint_is_path_error(self):
        with pytest.raises(InvalidPathError, match="endpoints"):
            parse_path("heights:0,1,2,1")

    @pytest.mark.parametrize(
        "text, position",
        [("heights:0,x,0", 10), ("steps:UXD", 7), ("curve:0", 0), ("heights:", 8)],
    )
    def test_malformed(self, text, position):
        with pytest.raises(ParseError) as info:
            parse_path(text)
        assert info.value.position == position

    def test_serialize_round_trip(self):
        for n in range(7):
            for g in enumerate_paths(n):
                assert parse_path(serialize_path(g)) == g
                assert parse_path("steps:" + g.steps) == g

    def test_serialize_form(self):
        assert serialize_path(H(0, 1, 0)) == "heights:0,1,0"
        assert str(EMPTY_PATH) == "heights:0"


class TestMonoid:
    def test_identity(self):
        g = H(0, 1, 0)
        assert concat_paths(EMPTY_PATH, g) == g == concat_paths(g, EMPTY_PATH)
        assert concat_paths() == EMPTY_PATH

    def test_examples(self):
        assert concat_paths(FLAT_STEP, H(0, 1, 0)) == H(0, 0, 1, 0)
        assert concat_paths(FLAT_STEP, H(0, 1, 0), H(0, 1, 2, 1, 2, 1, 0)) == H(
            0, 0, 1, 0, 1, 2, 1, 2, 1, 0
        )

    def test_suspend(self):
        assert suspend_path(EMPTY_PATH) == H(0, 1, 0)
        assert suspend_path(FLAT_STEP) == H(0, 1, 1, 0)
        assert suspend_path(H(0, 1, 0, 1, 0)) == H(0, 1, 2, 1, 2, 1, 0)

    def test_desuspend(self):
        assert desuspend_path(H(0, 1, 0)) == EMPTY_PATH
        assert desuspend_path(H(0, 1, 2, 1, 2, 1, 0)) == H(0, 1, 0, 1, 0)
        for bad in (H(0, 0, 1, 0), FLAT_STEP, EMPTY_PATH):
            with pytest.raises(InvalidPathError):
                desuspend_path(bad)

    def test_factorize(self):
        assert factorize_path(EMPTY_PATH) == []
        assert factorize_path(H(0, 0, 1, 0, 1, 2, 1, 2, 1, 0)) == [
            H(0, 0),
            H(0, 1, 0),
            H(0, 1, 2, 1, 2, 1, 0),
        ]
        assert factorize_path(H(0, 1, 1, 0)) == [H(0, 1, 1, 0)]

    def test_factorize_exhaustive(self):
        for n in range(9):
            for g in enumerate_paths(n):
                factors = factorize_path(g)
                assert concat_paths(*factors) == g
                assert all(is_primitive_path(f) for f in factors)
                assert factorize_path(concat_paths(*factors)) == factors

    def test_suspensions_are_the_long_primitives(self):
        for n in range(2, 9):
            primitives = {g for g in enumerate_paths(n) if is_primitive_path(g)}
            assert primitives == {suspend_path(g) for g in enumerate_paths(n - 2)}


class TestCounting:
    @pytest.mark.parametrize("n", range(len(MOTZKIN)))
    def test_recurrence_values(self, n):
        assert motzkin_number(n) == MOTZKIN[n]

    @pytest.mark.parametrize("n", range(12))
    def test_enumeration_matches_step_words(self, n):
        assert [g.heights for g in enumerate_paths(n)] == paths_by_steps(n)

    def test_enumeration_count_to_14(self):
        for n in range(15):
            assert sum(1 for _ in iter_paths(n)) == motzkin_number(n)

    def test_small_lists(self):
        assert enumerate_paths(0) == [EMPTY_PATH]
        assert enumerate_paths(2) == [H(0, 0, 0), H(0, 1, 0)]

    def test_negative(self):
        with pytest.raises(ValueError):
            motzkin_number(-1)


class TestRanking:
    @pytest.mark.parametrize("n", [0, 1, 5, 8])
    def test_rank_is_enumeration_index(self, n):
        for i, g in enumerate(enumerate_paths(n)):
            assert rank_path(g) == i
            assert unrank_path(n, i) == g

    def test_unrank_range(self):
        with pytest.raises(IndexError):
            unrank_path(3, 4)

    def test_random_path_is_deterministic(self):
        a = [random_path(20, random.Random(5)) for _ in range(3)]
        assert a[0] == a[1] == a[2]
        assert a[0].length == 20

    def test_random_path_roughly_uniform(self):
        rng = random.Random(0)
        counts = [0] * 9
        for _ in range(9000):
            counts[rank_path(random_path(4, rng))] += 1
        assert min(counts) > 850 and max(counts) < 1150


def test_path_validation():
    with pytest.raises(InvalidPathError):
        MotzkinPath(())
    with pytest.raises(InvalidPathError):
        H(0, -1, 0)
    assert H(0, 1, 1, 0).steps == "UFD"
    assert H(0, 1, 0)[1] == 1
