import pytest

from motzkin_multisegments import (
    InternalDefect,
    LinkedTriple,
    MotzkinPath,
    NotExcessiveError,
    NotInMError,
    NotWeightValidError,
    Segment,
    brute_force_excessive,
    concat,
    concat_paths,
    enumerate_excessive,
    enumerate_paths,
    fr,
    fr_inverse,
    fr_rank_tuple,
    is_excessive,
    is_in_M,
    motzkin_number,
    parse_multisegment,
    phi,
    rank_tuple,
    suspend,
    suspend_path,
    verify_isomorphism,
)
from motzkin_multisegments.correspondence import brute_force_M, brute_force_universe
from motzkin_multisegments.motzkin import EMPTY_PATH, FLAT_STEP

from oracles import fr_rank_literal

H = MotzkinPath.of
P = parse_multisegment
WORKED_PATH = H(0, 0, 1, 0, 1, 2, 1, 2, 1, 0)
WORKED_M = P("n=9: 1-2,1-5,1-8,1-9*7,3-4,5-9,6-7,8-9,9-9")

# frozen from the literal quadruple max in oracles.fr_rank_literal
WORKED_RANKS = {(1, 1): 10, (1, 3): 9, (1, 6): 8, (1, 9): 7, (3, 4): 10, (5, 9): 8, (9, 9): 10}


class TestRankFormula:
    def test_literal_small(self):
        assert fr_rank_literal((0, 0)) == {(1, 1): 2}
        assert fr_rank_literal((0, 1, 0)) == {(1, 1): 3, (1, 2): 2, (2, 2): 3}

    def test_frozen_worked_values(self):
        r = fr_rank_tuple(WORKED_PATH)
        for key, value in WORKED_RANKS.items():
            assert r[key] == value

    @pytest.mark.parametrize("n", range(9))
    def test_fast_formula_matches_literal(self, n):
        for g in enumerate_paths(n):
            assert dict(fr_rank_tuple(g).items()) == fr_rank_literal(g.heights)

    def test_rank_of_image(self):
        for g in enumerate_paths(6):
            assert rank_tuple(fr(g)) == fr_rank_tuple(g)


class TestFr:
    def test_examples(self):
        assert fr(FLAT_STEP) == P("n=1: 1-1*2")
        assert fr(H(0, 1, 0)) == P("n=2: 1-1,1-2*2,2-2")
        assert fr(WORKED_PATH) == WORKED_M
        assert fr(EMPTY_PATH) == P("n=0:")

    @pytest.mark.parametrize("n", [1, 2, 5, 9])
    def test_flat(self, n):
        assert fr(MotzkinPath((0,) * (n + 1))) == P(f"n={n}: 1-{n}*{n + 1}")

    def test_images_in_M_and_excessive(self):
        for n in range(8):
            for g in enumerate_paths(n):
                m = fr(g)
                assert is_in_M(m) and is_excessive(m)


class TestPhi:
    def test_examples(self):
        assert phi(EMPTY_PATH) == P("n=0:")
        assert phi(H(0, 1, 0)) == suspend(P("n=0:"))
        assert phi(WORKED_PATH) == fr(WORKED_PATH)

    @pytest.mark.parametrize("n", range(9))
    def test_agrees_with_fr(self, n):
        for g in enumerate_paths(n):
            assert phi(g) == fr(g)


class TestHomomorphism:
    def test_pairs_exhaustive(self):
        paths = [g for n in range(5) for g in enumerate_paths(n)]
        for g in paths:
            for h in paths:
                assert fr(concat_paths(g, h)) == concat(fr(g), fr(h))

    def test_suspension_exhaustive(self):
        for n in range(7):
            for g in enumerate_paths(n):
                assert fr(suspend_path(g)) == suspend(fr(g))


class TestInverse:
    def test_examples(self):
        assert fr_inverse(P("n=1: 1-1*2")) == FLAT_STEP
        assert fr_inverse(WORKED_M) == WORKED_PATH
        assert fr_inverse(P("n=0:")) == EMPTY_PATH

    def test_not_excessive_witness(self):
        with pytest.raises(NotExcessiveError) as info:
            fr_inverse(P("n=3: 1-1,2-2,3-3,1-3*3"))
        assert info.value.witness == LinkedTriple(Segment(1, 1), Segment(2, 2), Segment(3, 3))

    def test_not_in_M(self):
        with pytest.raises(NotInMError) as info:
            fr_inverse(P("n=4: 1-1*5,2-3*3,2-4*2,4-4*3"))
        assert info.value.column == 1

    def test_not_weight_valid(self):
        with pytest.raises(NotWeightValidError):
            fr_inverse(P("n=2: 1-1,1-2,2-2"))

    @pytest.mark.parametrize("n", range(11))
    def test_round_trips(self, n):
        for entry in enumerate_excessive(n):
            assert fr_inverse(entry.multisegment) == entry.path
            assert fr(fr_inverse(entry.multisegment)) == entry.multisegment

    def test_rejects_every_non_excessive_in_M(self):
        for n in range(5):
            for m in brute_force_M(n) - brute_force_excessive(n):
                with pytest.raises(NotExcessiveError):
                    fr_inverse(m)


class TestCatalog:
    def test_small(self):
        (entry,) = enumerate_excessive(1)
        assert entry.multisegment == P("n=1: 1-1*2")
        assert [e.multisegment for e in enumerate_excessive(2)] == [
            P("n=2: 1-2*3"),
            P("n=2: 1-1,1-2*2,2-2"),
        ]

    def test_entries_consistent(self):
        entries = enumerate_excessive(4)
        assert len(entries) == 9 == len({e.multisegment for e in entries})
        for e in entries:
            assert e.multisegment == fr(e.path)
            assert e.rank == rank_tuple(e.multisegment)


class TestOracle:
    @pytest.mark.parametrize(
        "n, size_R, size_M, size_E", [(0, 1, 1, 1), (1, 1, 1, 1), (2, 4, 2, 2), (3, 35, 5, 4), (4, 672, 15, 9), (5, 27027, 52, 21)]
    )
    def test_sizes(self, n, size_R, size_M, size_E):
        assert len(brute_force_universe(n)) == size_R
        assert len(brute_force_M(n)) == size_M
        assert len(brute_force_excessive(n)) == size_E == motzkin_number(n)

    def test_small_sets(self):
        assert brute_force_excessive(1) == {P("n=1: 1-1*2")}
        assert brute_force_excessive(2) == {P("n=2: 1-2*3"), P("n=2: 1-1,1-2*2,2-2")}

    def test_cap(self):
        with pytest.raises(ValueError):
            brute_force_excessive(6)
        with pytest.raises(ValueError):
            brute_force_excessive(-1)


class TestVerifyIsomorphism:
    def test_base(self):
        report = verify_isomorphism(0)
        assert report.passed and report.entries == 1

    def test_with_oracle(self):
        report = verify_isomorphism(5)
        assert report.passed and report.entries == 21 and report.oracle_checked
        assert report.summary() == "n=5: PASS, 21 entries (oracle checked)"

    def test_large(self):
        report = verify_isomorphism(10)
        assert report.passed and report.entries == 2188 and not report.oracle_checked
        assert report.counterexamples == []


def test_reconstruction_failure_is_a_defect(monkeypatch):
    from motzkin_multisegments import correspondence
    from motzkin_multisegments.multisegments import RankTuple

    monkeypatch.setattr(
        correspondence, "fr_rank_tuple", lambda g: RankTuple.from_dict(2, {(1, 1): 1, (2, 2): 1, (1, 2): 2})
    )
    with pytest.raises(InternalDefect):
        correspondence.fr(H(0, 1, 0))
