import itertools
import math
from fractions import Fraction

import pytest

from pathmn import (
    ParseError,
    add_ribbons,
    clear_caches,
    contains,
    enumerate_monotonic,
    frozen_set,
    pad_column,
    partitions_of,
    path_chi,
    path_power_to_schur,
    render_tiling,
    skew_mn,
    stable_expansion,
    tiling_from_type_depth,
    tiling_tally,
)
from brute import brute_skew_mn, is_ribbon, partitions_list, ribbon_sign, skew_cells


def test_add_ribbons_example():
    adds = add_ribbons((3, 3, 1), 3)
    got = {(a.result, a.tail_row, a.tail_col, a.sign) for a in adds}
    assert got == {
        ((6, 3, 1), 1, 4, 1),
        ((5, 4, 1), 2, 4, -1),
        ((3, 3, 2, 2), 4, 1, -1),
        ((3, 3, 1, 1, 1, 1), 6, 1, 1),
    }
    assert all(a.base == (3, 3, 1) and a.size == 3 for a in adds)


def test_add_ribbons_unit_cases():
    adds = add_ribbons((), 1)
    assert len(adds) == 1
    a = adds[0]
    assert (a.result, a.tail_row, a.tail_col, a.sign) == ((1,), 1, 1, 1)
    with pytest.raises(ParseError):
        add_ribbons((2, 1), 0)


def test_add_ribbons_geometry():
    for lam in [(), (1,), (3, 1), (3, 3, 1), (4, 2, 2, 1)]:
        for r in range(1, 5):
            seen = set()
            for a in add_ribbons(lam, r):
                cells = set(skew_cells(a.result, a.base))
                assert len(cells) == r
                assert is_ribbon(cells)
                assert a.sign == ribbon_sign(cells)
                # the tail is the southwesternmost cell
                tail = max(cells, key=lambda rc: (rc[0], -rc[1]))
                assert (a.tail_row, a.tail_col) == tail
                assert a.result not in seen
                seen.add(a.result)


def test_add_ribbons_complete():
    for lam in [(), (2, 1), (3, 3, 1), (2, 2)]:
        for r in range(1, 5):
            expect = {
                nxt
                for nxt in partitions_list(sum(lam) + r)
                if contains(nxt, lam) and is_ribbon(set(skew_cells(nxt, lam)))
            }
            assert {a.result for a in add_ribbons(lam, r)} == expect


def test_skew_mn_values():
    assert skew_mn((4, 3, 1), (3, 2, 2, 1)) == -1
    assert skew_mn((2, 1), (1, 1, 1)) == 2
    assert skew_mn((5,), (3, 2)) == 1
    assert skew_mn((1, 1, 1), (3,)) == 1
    assert skew_mn((), ()) == 1


def test_skew_mn_matches_chain_count():
    for n in range(6):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert skew_mn(lam, mu) == brute_skew_mn(lam, mu)


def test_skew_mn_with_inner_shape():
    cases = [
        ((3, 1), (2, 1), (1,)),
        ((3, 2), (2, 1), (2,)),
        ((4, 2), (2, 2), (1, 1)),
        ((3, 2, 1), (3, 1), (2,)),
    ]
    for outer, alpha, inner in cases:
        assert skew_mn(outer, alpha, inner=inner) == brute_skew_mn(outer, alpha, inner)


def test_skew_mn_errors():
    with pytest.raises(ParseError):
        skew_mn((3, 1), (2, 1))
    with pytest.raises(ParseError):
        skew_mn((3, 1), (), inner=(4,))


def test_skew_mn_order_independent():
    for n in range(1, 7):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                vals = {skew_mn(lam, alpha) for alpha in set(itertools.permutations(mu))}
                assert len(vals) == 1


def test_single_row_tilings():
    for n in range(1, 8):
        tilings = list(enumerate_monotonic((1,) * n))
        assert len(tilings) == 1
        assert tilings[0].shape == (n,)
        assert tilings[0].sign == 1


def test_empty_type():
    tilings = list(enumerate_monotonic(()))
    assert len(tilings) == 1
    t = tilings[0]
    assert t.shape == () and t.type == () and t.sign == 1


def test_census_321():
    tilings = list(enumerate_monotonic((3, 2, 1)))
    assert len(tilings) == 17
    assert sum(1 for t in tilings if t.sign == 1) == 11
    assert sum(1 for t in tilings if t.sign == -1) == 6
    assert {t.shape for t in tilings} == {
        (6,),
        (5, 1),
        (4, 2),
        (4, 1, 1),
        (3, 3),
        (3, 2, 1),
    }
    # the two (4, 2) tilings cancel, so the tally has no (4, 2) key
    assert sorted(t.sign for t in tilings if t.shape == (4, 2)) == [-1, 1]
    assert tiling_tally((3, 2, 1)) == {
        (6,): 6,
        (5, 1): -4,
        (4, 1, 1): 2,
        (3, 3): 2,
        (3, 2, 1): -1,
    }


def test_tiling_structure_invariants():
    for n in range(8):
        for mu in partitions_of(n):
            seen = set()
            for t in enumerate_monotonic(mu):
                assert tuple(sorted(t.type, reverse=True)) == mu
                assert t.depth == tuple(sorted(t.depth, reverse=True))
                assert list(t.tail_cols) == sorted(set(t.tail_cols))
                assert t.chain[0] == ()
                for a, b in zip(t.chain, t.chain[1:]):
                    assert contains(b, a)
                    assert is_ribbon(set(skew_cells(b, a)))
                if t.type:
                    assert t.shape[0] >= len(t.type)
                key = (t.type, t.depth)
                assert key not in seen
                seen.add(key)


def test_sign_comes_from_frozen_part():
    for n in range(8):
        for mu in partitions_of(n):
            for t in enumerate_monotonic(mu):
                frozen_signs = [s for s, d in zip(t.signs, t.depth) if d >= 2]
                assert t.sign == math.prod(frozen_signs)
                assert t.is_frozen() == all(d >= 2 for d in t.depth)


def test_tiling_from_type_depth():
    for mu in [(2, 1), (3, 2, 1), (2, 2), (4, 3)]:
        for t in enumerate_monotonic(mu):
            assert tiling_from_type_depth(t.type, t.depth) == t
    assert tiling_from_type_depth((5, 3, 3), (3, 2, 1)) is None
    with pytest.raises(ParseError):
        tiling_from_type_depth((2, 1), (1,))


def test_path_chi():
    assert path_chi((6,), (3, 2, 1)) == 6
    assert path_chi((3, 2, 1), (3, 2, 1)) == -1
    assert path_chi((4, 2), (3, 2, 1)) == 0
    for n in range(1, 7):
        # one tiling of type (1, ..., 1): every ribbon a single cell in row 1
        assert path_chi((n,), (1,) * n) == 1
    with pytest.raises(ParseError):
        path_chi((3,), (2, 2))


def test_frozen_set_small_type():
    base = frozen_set((3,), 4)
    assert len(base) == 4
    assert {(t.type, t.depth) for t in base} == {
        ((), ()),
        ((3,), (2,)),
        ((3,), (3,)),
        ((3, 1), (2, 2)),
    }
    assert frozen_set((3,), 5) == base
    assert frozen_set((3,), 8) == base
    assert len(frozen_set((3,), 3)) == 3


def test_frozen_set_stability_threshold():
    for mu in [(), (2,), (2, 2), (3, 2), (4,), (2, 2, 2), (3, 3)]:
        start = max(2 * (sum(mu) - len(mu)), sum(mu))
        ref = frozen_set(mu, start)
        assert frozen_set(mu, start + 1) == ref
        assert frozen_set(mu, start + 3) == ref
        assert all(t.is_frozen() for t in ref)
    assert len(frozen_set((), 5)) == 1


def test_frozen_set_errors():
    with pytest.raises(ParseError):
        frozen_set((2, 1), 5)
    with pytest.raises(ParseError):
        frozen_set((3,), 2)


def test_stable_expansion_values():
    assert dict(stable_expansion((2,), 6).items()) == {
        (6,): Fraction(120),
        (5, 1): Fraction(-24),
    }
    assert dict(stable_expansion((2, 2), 7).items()) == {
        (7,): Fraction(120),
        (6, 1): Fraction(-48),
        (5, 2): Fraction(12),
    }
    assert dict(stable_expansion((), 0).items()) == {(): Fraction(1)}
    for n in range(1, 6):
        assert dict(stable_expansion((), n).items()) == {
            (n,): Fraction(math.factorial(n))
        }


def test_stable_expansion_matches_tilings():
    for size in range(7):
        for mu in partitions_of(size):
            if any(p == 1 for p in mu):
                continue
            for n in range(size, size + 5):
                stable = dict(stable_expansion(mu, n).items())
                direct = dict(path_power_to_schur(pad_column(mu, n)).items())
                assert stable == direct


def test_stable_expansion_first_row_gap():
    for mu, n in [((2,), 8), ((2, 2), 8), ((3, 2), 9), ((2, 2, 2), 9)]:
        bound = n - 2 * (sum(mu) - len(mu))
        for lam, _ in stable_expansion(mu, n).items():
            second = lam[1] if len(lam) > 1 else 0
            assert lam[0] - second >= bound


def test_stable_expansion_errors():
    with pytest.raises(ParseError):
        stable_expansion((2, 1), 7)
    with pytest.raises(ParseError):
        stable_expansion((3,), 2)


def test_render_tiling():
    grids = {render_tiling(t) for t in enumerate_monotonic((2, 2))}
    assert grids == {" 1  2\n 1* 2*", " 1  2* 2\n 1*", " 1* 1  2* 2"}
    (only,) = enumerate_monotonic(())
    assert render_tiling(only) == "(empty tiling)"


def test_clear_caches_is_safe():
    before = skew_mn((4, 3, 1), (3, 2, 2, 1))
    clear_caches()
    assert skew_mn((4, 3, 1), (3, 2, 2, 1)) == before
