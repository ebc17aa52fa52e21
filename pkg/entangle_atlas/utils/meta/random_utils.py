import numpy as np


MAX_SEED = 2**64 - 1


def check_seed(value, name="seed"):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {type(value)}")
    if value < 0 or value > MAX_SEED:
        raise ValueError(f"{name} must lie in [0, 2**64), got {value}")
    return int(value)


def get_random_generator(seed, stream_id=0, key=()):
    """Generator for substream ``stream_id`` of the master ``seed``.

    The bit generator is the counter-based Philox; ``SeedSequence(seed, spawn_key=(*key, stream_id))`` derives its
    key, so every (key, stream_id) pair is a separate stream and the same triple always replays the same numbers.
    """
    seed = check_seed(seed)
    stream_id = check_seed(stream_id, "stream_id")
    spawn_key = tuple(int(k) for k in key) + (stream_id,)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=spawn_key)))
