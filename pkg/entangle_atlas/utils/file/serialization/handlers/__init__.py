from .base import BaseFileHandler
from .json_handler import JsonHandler
from .yaml_handler import YamlHandler
from .csv_handler import CSVHandler
from .txt_handler import TxtHandler
