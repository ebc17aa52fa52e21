import json, math, numpy as np
from .base import BaseFileHandler


def set_default(obj):
    """Convert ``set``, ``range``, ``np.ndarray`` and numpy scalars into plain python values for json."""
    if isinstance(obj, (set, frozenset, range)):
        return sorted(obj) if isinstance(obj, (set, frozenset)) else list(obj)
    elif isinstance(obj, np.ndarray):
        return obj.tolist()
    elif isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f"{type(obj)} is unsupported for json dump")


def replace_non_finite(obj):
    """json has no inf/nan; they are written as the strings "inf", "-inf" and "nan"."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    if isinstance(obj, dict):
        return {key: replace_non_finite(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [replace_non_finite(value) for value in obj]
    return obj


class JsonHandler(BaseFileHandler):
    def load_from_fileobj(self, file, **kwargs):
        return json.load(file, **kwargs)

    def dump_to_fileobj(self, obj, file, **kwargs):
        kwargs.setdefault("default", set_default)
        json.dump(replace_non_finite(obj), file, allow_nan=False, **kwargs)

    def dump_to_str(self, obj, **kwargs):
        kwargs.setdefault("default", set_default)
        return json.dumps(replace_non_finite(obj), allow_nan=False, **kwargs)
