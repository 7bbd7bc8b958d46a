import numpy as np
import pytest

from trinodiff.sets import ElementSet


def test_construction(ctx5):
    S = ElementSet.from_elements([3, 1, 3], ctx5)
    assert S.elements().tolist() == [1, 3]
    assert len(S) == 2 and 3 in S and 2 not in S
    assert list(S) == [1, 3]
    with pytest.raises(ValueError):
        ElementSet.from_elements([32], ctx5)
    with pytest.raises(ValueError):
        ElementSet(np.zeros(8, dtype=bool), 5)


def test_full_and_empty(ctx5):
    full = ElementSet.full_group(ctx5)
    assert len(full) == 31 and not full.has_zero
    assert len(ElementSet.empty(ctx5)) == 0


def test_algebra(ctx5):
    A = ElementSet.from_elements([1, 2, 3], ctx5)
    B = ElementSet.from_elements([3, 4], ctx5)
    assert (A & B).elements().tolist() == [3]
    assert (A | B).elements().tolist() == [1, 2, 3, 4]
    assert (A - B).elements().tolist() == [1, 2]
    assert not A.isdisjoint(B)
    assert (A - B).isdisjoint(B)
    assert hash(A) == hash(ElementSet.from_elements([3, 2, 1], ctx5))


def test_mask_read_only(ctx5):
    S = ElementSet.from_elements([1], ctx5)
    with pytest.raises(ValueError):
        S.mask[2] = True
