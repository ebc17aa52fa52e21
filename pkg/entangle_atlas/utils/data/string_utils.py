def float_str(num, precision):
    format_str = "%.{0}f".format(precision)
    return format_str % num


def num_to_str(num, precision=None):
    """Shortest decimal string that parses back to the same float; fixed precision when ``precision`` is set."""
    if precision is not None:
        return float_str(num, precision)
    if isinstance(num, int):
        return str(num)
    return repr(float(num))
