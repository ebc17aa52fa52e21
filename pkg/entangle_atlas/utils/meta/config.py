import ast, os.path as osp, shutil, sys, tempfile
from argparse import Action
from importlib import import_module

from addict import Dict
from yapf.yapflib.yapf_api import FormatCode


BASE_KEY = "_base_"
DELETE_KEY = "_delete_"
RESERVED_KEYS = ["filename", "text", "pretty_text"]
SUPPORTED_SUFFIXES = [".py", ".json", ".yaml", ".yml"]


class ConfigDict(Dict):
    def __missing__(self, name):
        raise KeyError(name)

    def __getattr__(self, name):
        try:
            value = super(ConfigDict, self).__getattr__(name)
        except KeyError:
            ex = AttributeError(f"'{self.__class__.__name__}' object has no attribute '{name}'")
        except Exception as e:
            ex = e
        else:
            return value
        raise ex


class Config:
    """Nested configuration loaded from a python, json or yaml file.

    Values are reachable as attributes or items. A file may declare ``_base_`` to inherit
    from other config files in the same folder; keys of the child override the base.

    Example:
        >>> cfg = Config(dict(survey_cfg=dict(n1=2, n2_range=[2, 8])))
        >>> cfg.survey_cfg.n1
        2
        >>> cfg = Config.fromfile("configs/survey/n1_2.py")
        >>> cfg.survey_cfg.samples_per_dim
        100000
    """

    @staticmethod
    def _validate_py_syntax(filename):
        with open(filename, "r") as f:
            content = f.read()
        try:
            ast.parse(content)
        except SyntaxError as e:
            raise SyntaxError(f"There are syntax errors in config file {filename}: {e}")

    @staticmethod
    def _file2dict(filename):
        from .path_utils import check_files_exist

        filename = osp.abspath(osp.expanduser(filename))
        check_files_exist(filename)
        suffix = osp.splitext(filename)[1]
        if suffix not in SUPPORTED_SUFFIXES:
            raise IOError(f"Only {'/'.join(SUPPORTED_SUFFIXES)} config files are supported, got {filename}")

        if suffix == ".py":
            Config._validate_py_syntax(filename)
            with tempfile.TemporaryDirectory() as temp_config_dir:
                temp_config_file = tempfile.NamedTemporaryFile(dir=temp_config_dir, suffix=suffix, delete=False)
                temp_config_file.close()
                shutil.copyfile(filename, temp_config_file.name)
                temp_module_name = osp.splitext(osp.basename(temp_config_file.name))[0]
                sys.path.insert(0, temp_config_dir)
                mod = import_module(temp_module_name)
                sys.path.pop(0)
                cfg_dict = {name: value for name, value in mod.__dict__.items() if not name.startswith("__")}
                del sys.modules[temp_module_name]
        else:
            from ..file import load

            cfg_dict = load(filename)
            if not isinstance(cfg_dict, dict):
                raise TypeError(f"Config file {filename} must hold a mapping, got {type(cfg_dict)}")

        with open(filename, "r") as f:
            cfg_text = filename + "\n" + f.read()

        if BASE_KEY in cfg_dict:
            cfg_dir = osp.dirname(filename)
            base_filenames = cfg_dict.pop(BASE_KEY)
            base_filenames = base_filenames if isinstance(base_filenames, list) else [base_filenames]

            base_cfg_dict, cfg_text_list = dict(), []
            for base_filename in base_filenames:
                _cfg_dict, _cfg_text = Config._file2dict(osp.join(cfg_dir, base_filename))
                if len(base_cfg_dict.keys() & _cfg_dict.keys()) > 0:
                    raise KeyError("Duplicate key is not allowed among bases")
                base_cfg_dict.update(_cfg_dict)
                cfg_text_list.append(_cfg_text)

            cfg_dict = Config._merge_a_into_b(cfg_dict, base_cfg_dict)
            cfg_text_list.append(cfg_text)
            cfg_text = "\n".join(cfg_text_list)
        return cfg_dict, cfg_text

    @staticmethod
    def _merge_a_into_b(a, b):
        """Merge dict ``a`` into a copy of dict ``b``; values of ``a`` win.

        Examples:
            >>> Config._merge_a_into_b(dict(survey_cfg=dict(seed=2)), dict(survey_cfg=dict(seed=1, n1=2)))
            {'survey_cfg': {'seed': 2, 'n1': 2}}
            >>> Config._merge_a_into_b(dict(survey_cfg=dict(_delete_=True, seed=2)), dict(survey_cfg=dict(seed=1, n1=2)))
            {'survey_cfg': {'seed': 2}}
        """
        b = b.copy()
        for k, v in a.items():
            if isinstance(v, dict) and k in b and not v.pop(DELETE_KEY, False):
                if not isinstance(b[k], dict):
                    raise TypeError(
                        f"{k}={v} in child config cannot inherit from base because {k} is a dict in the child config "
                        f"but is of type {type(b[k])} in base config. You may set `{DELETE_KEY}=True` to ignore the base config"
                    )
                b[k] = Config._merge_a_into_b(v, b[k])
            else:
                b[k] = v
        return b

    @staticmethod
    def fromfile(filename):
        cfg_dict, cfg_text = Config._file2dict(filename)
        return Config(cfg_dict, cfg_text=cfg_text, filename=filename)

    def __init__(self, cfg_dict=None, cfg_text=None, filename=None):
        if cfg_dict is None:
            cfg_dict = dict()
        elif not isinstance(cfg_dict, dict):
            raise TypeError(f"cfg_dict must be a dict, but got {type(cfg_dict)}")
        for key in cfg_dict:
            if key in RESERVED_KEYS:
                raise KeyError(f"{key} is reserved for config file")

        super(Config, self).__setattr__("_cfg_dict", ConfigDict(cfg_dict))
        super(Config, self).__setattr__("_filename", filename)
        super(Config, self).__setattr__("_text", cfg_text or "")

    def dict(self):
        return self._cfg_dict

    def to_dict(self):
        return self._cfg_dict.to_dict()

    @property
    def filename(self):
        return self._filename

    @property
    def text(self):
        return self._text

    @property
    def pretty_text(self):
        lines = [f"{key} = {value!r}" for key, value in self.to_dict().items()]
        yapf_style = dict(based_on_style="pep8", column_limit=120, split_before_expression_after_opening_paren=True)
        text, _ = FormatCode("\n".join(lines) + "\n", style_config=yapf_style)
        return text

    def __repr__(self):
        return f"Config (path: {self.filename}): {self._cfg_dict.__repr__()}"

    def __len__(self):
        return len(self._cfg_dict)

    def __getattr__(self, name):
        return getattr(self._cfg_dict, name)

    def __getitem__(self, name):
        return self._cfg_dict.__getitem__(name)

    def __setattr__(self, name, value):
        if isinstance(value, dict):
            value = ConfigDict(value)
        self._cfg_dict.__setattr__(name, value)

    def __setitem__(self, name, value):
        if isinstance(value, dict):
            value = ConfigDict(value)
        self._cfg_dict.__setitem__(name, value)

    def __contains__(self, name):
        return name in self._cfg_dict

    def __iter__(self):
        return iter(self._cfg_dict)

    def __getstate__(self):
        return (self._cfg_dict, self._filename, self._text)

    def __setstate__(self, state):
        _cfg_dict, _filename, _text = state
        super(Config, self).__setattr__("_cfg_dict", _cfg_dict)
        super(Config, self).__setattr__("_filename", _filename)
        super(Config, self).__setattr__("_text", _text)

    def merge_from_dict(self, options):
        """Merge dotted ``key.sub_key=value`` options into the config.

        Examples:
            >>> cfg = Config(dict(survey_cfg=dict(n1=2, seed=0)))
            >>> cfg.merge_from_dict({"survey_cfg.seed": 7})
            >>> cfg.survey_cfg.seed
            7
        """
        option_cfg_dict = {}
        for full_key, v in options.items():
            d = option_cfg_dict
            key_list = full_key.split(".")
            for subkey in key_list[:-1]:
                d.setdefault(subkey, ConfigDict())
                d = d[subkey]
            d[key_list[-1]] = v

        cfg_dict = super(Config, self).__getattribute__("_cfg_dict")
        super(Config, self).__setattr__("_cfg_dict", ConfigDict(Config._merge_a_into_b(option_cfg_dict, cfg_dict)))


class DictAction(Action):
    """
    argparse action to split an argument into KEY=VALUE form on the first = and append to a dictionary.
    List options can be passed as comma separated values, i.e 'KEY=V1,V2,V3', or with explicit brackets,
    i.e. 'KEY=[V1,V2,V3]'.
    """

    @staticmethod
    def _parse_int_float_bool(val):
        try:
            return int(val)
        except ValueError:
            pass
        try:
            return float(val)
        except ValueError:
            pass
        if val.lower() in ["true", "false"]:
            return val.lower() == "true"
        if val.lower() == "none":
            return None
        return val

    @staticmethod
    def _parse_iterable(val):
        """Parse '1,2', '[2, 8]' or '(2,8)' into python values; anything else is a scalar.

        Examples:
            >>> DictAction._parse_iterable('2,8')
            [2, 8]
            >>> DictAction._parse_iterable('(2, 8)')
            (2, 8)
        """
        val = val.strip("'\"").replace(" ", "")
        is_tuple = False
        if val.startswith("(") and val.endswith(")"):
            is_tuple = True
            val = val[1:-1]
        elif val.startswith("[") and val.endswith("]"):
            val = val[1:-1]
        elif "," not in val:
            return DictAction._parse_int_float_bool(val)

        values = [DictAction._parse_int_float_bool(item) for item in val.split(",") if len(item) > 0]
        return tuple(values) if is_tuple else values

    def __call__(self, parser, namespace, values, option_string=None):
        options = {}
        for kv in values:
            if "=" not in kv:
                parser.error(f"{option_string} expects KEY=VALUE pairs, got {kv!r}")
            key, val = kv.split("=", maxsplit=1)
            options[key] = self._parse_iterable(val)
        setattr(namespace, self.dest, options)
