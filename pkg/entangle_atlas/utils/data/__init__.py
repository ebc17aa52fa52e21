from .type_utils import is_not_null, is_str, is_integer, is_num, is_seq_of
from .string_utils import float_str, num_to_str
