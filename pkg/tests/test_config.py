import itertools
import random

import pytest
from hypothesis import given, settings

from cicyg2 import ConfigurationMatrix, ExpansionStep, expand_row, canonical_form, invariant_under_row_swaps, validate
from cicyg2.config import canonical_key
from known import BICUBIC, CONFIGEX1, QUINTIC, TETRAQUADRIC
from oracles import brute_canonical_rows, swap_matches_by_column_permutation
from strategies import matrices, random_matrix, shuffled


def test_structure_is_checked():
    with pytest.raises(ValueError):
        ConfigurationMatrix([], [])
    with pytest.raises(ValueError):
        ConfigurationMatrix([1, 1], [[1, 1], [1]])
    with pytest.raises(ValueError):
        ConfigurationMatrix([1], [[-1, 3]])
    with pytest.raises(ValueError):
        ConfigurationMatrix([0], [[1]])


def test_validate_quintic():
    rep = validate(QUINTIC)
    assert rep.threefold_ok and rep.chern_ok and rep.ok


def test_validate_configex1():
    rep = validate(CONFIGEX1)
    assert rep.threefold_ok and rep.chern_ok
    assert [sum(r) for r in CONFIGEX1.degrees] == [2, 2, 2, 3, 4]


def test_validate_failures_are_reported():
    rep = validate(ConfigurationMatrix([1], [[3]]))
    assert not rep.threefold_ok
    assert not rep.chern_ok
    assert len(rep.messages) == 2


def test_validate_flags_zero_columns():
    rep = validate(ConfigurationMatrix([1, 1, 2], [[2, 0], [2, 0], [3, 0]]))
    assert rep.degenerate_columns == (1,)
    assert not rep.ok


def test_canonical_form_examples():
    swapped = ConfigurationMatrix([2, 2], [[3], [3]]).permuted([1, 0], [0])
    assert canonical_form(swapped) == canonical_form(BICUBIC)
    col_swapped = CONFIGEX1.permuted(range(5), [2, 1, 0, 3, 4])
    assert canonical_form(col_swapped) == canonical_form(CONFIGEX1)
    assert canonical_form(QUINTIC) == QUINTIC


def test_canonical_form_distinguishes_inequivalent():
    a = ConfigurationMatrix([1, 2], [[1, 1], [3, 0]])
    b = ConfigurationMatrix([1, 2], [[2, 0], [2, 1]])
    assert canonical_form(a) != canonical_form(b)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_canonical_form_matches_brute_force(cfg):
    assert canonical_key(cfg) == brute_canonical_rows(cfg.dims, cfg.degrees)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_canonical_form_idempotent(cfg):
    c = canonical_form(cfg)
    assert canonical_form(c) == c


def test_canonical_form_handles_many_symmetric_rows():
    cfg = TETRAQUADRIC
    for _ in range(8):
        cfg = expand_row(cfg, ExpansionStep(0, 0))
    assert cfg.m == 12
    rng = random.Random(3)
    for _ in range(5):
        assert canonical_form(shuffled(cfg, rng)) == canonical_form(cfg)


def test_row_swap_invariance_examples():
    assert invariant_under_row_swaps(CONFIGEX1, [(1, 2)])
    assert not invariant_under_row_swaps(CONFIGEX1, [(0, 1)])
    assert invariant_under_row_swaps(QUINTIC, [])


def test_row_swap_brute_confirms_rejection():
    # no column permutation at all restores configex1 after swapping its first two rows
    rows = CONFIGEX1.degrees
    swapped = [rows[1], rows[0]] + list(rows[2:])
    for perm in itertools.permutations(range(5)):
        assert [[row[a] for a in perm] for row in rows] != swapped


@pytest.mark.parametrize("pairs", [[(0, 3)], [(0, 1), (1, 2)], [(2, 2)]])
def test_row_swap_preconditions(pairs):
    with pytest.raises(ValueError):
        invariant_under_row_swaps(CONFIGEX1, pairs)


def test_row_swap_agrees_with_column_permutation_search():
    rng = random.Random(11)
    checked = 0
    while checked < 300:
        cfg = random_matrix(rng, max_rows=5, max_cols=7, max_entry=2)
        cfg = ConfigurationMatrix([1] * cfg.m, cfg.degrees)
        if cfg.m < 2:
            continue
        r, s = rng.sample(range(cfg.m), 2)
        expected = swap_matches_by_column_permutation(cfg.degrees, [(r, s)])
        assert invariant_under_row_swaps(cfg, [(r, s)]) == expected
        checked += 1
    assert invariant_under_row_swaps(TETRAQUADRIC, [(0, 1), (2, 3)])
