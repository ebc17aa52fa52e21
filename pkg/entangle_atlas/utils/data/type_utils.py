from collections.abc import Sequence
from numbers import Integral, Real


def is_not_null(item):
    return item is not None


def is_str(item):
    return isinstance(item, str)


def is_integer(item):
    return isinstance(item, Integral) and not isinstance(item, bool)


def is_num(item):
    return isinstance(item, Real) and not isinstance(item, bool)


def is_seq_of(seq, expected_type=None, seq_type=None):
    exp_seq_type = Sequence if seq_type is None else seq_type
    if not isinstance(seq, exp_seq_type):
        return False
    if expected_type:
        for item in seq:
            if not isinstance(item, expected_type):
                return False
    return True
