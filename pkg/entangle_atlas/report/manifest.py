from dataclasses import asdict, dataclass, field
from typing import Dict, List

from ..version import __version__
from ..utils.meta import get_meta_info, get_time_stamp
from .records import write_file


def manifest_filename(n1):
    return f"manifest_n1={n1}.json"


@dataclass
class RunManifest:
    """Everything needed to rerun a survey: ``--config <manifest>`` reads the ``survey_cfg`` section back."""

    survey_cfg: dict
    version: str = __version__
    timestamp: str = field(default_factory=get_time_stamp)
    dim_seconds: Dict[str, float] = field(default_factory=dict)
    output_cfg: dict = field(default_factory=dict)
    outputs: List[str] = field(default_factory=list)
    meta_info: dict = field(default_factory=get_meta_info)

    def to_dict(self):
        return asdict(self)

    def dump(self, path):
        return write_file(self.to_dict(), path, indent=2)
