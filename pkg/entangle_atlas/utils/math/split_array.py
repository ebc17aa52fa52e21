def split_num(num, n):
    """
    Divide num into m=min(n, num) elements x_1, ...., x_m, where x_1, ..., x_m >= 1 and max_{i,j} |x_i - x_j| <= 1
    """
    n = min(num, n)
    if n <= 0:
        return 0, []
    min_steps = num // n
    splits = []
    for i in range(n):
        if i < num - min_steps * n:
            splits.append(min_steps + 1)
        else:
            splits.append(min_steps)
    assert sum(splits) == num
    return n, splits


def contiguous_blocks(items, n):
    """Cut ``items`` into at most ``n`` contiguous, order-preserving blocks whose sizes differ by at most one."""
    items = list(items)
    _, splits = split_num(len(items), n)
    blocks, start = [], 0
    for size in splits:
        blocks.append(items[start : start + size])
        start += size
    return blocks
