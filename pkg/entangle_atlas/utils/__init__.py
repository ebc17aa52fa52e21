from .meta import *
from .data import *
from .file import *
from .math import *
