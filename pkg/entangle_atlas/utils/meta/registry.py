import inspect


class Registry:
    """A registry mapping names to classes or functions.

    Example:
        >>> SIMPLEX_SAMPLERS = Registry("simplex sampler")
        >>> @SIMPLEX_SAMPLERS.register_module(name="exponential")
        >>> def exponential_simplex(n, rng, size=None):
        >>>     ...
        >>> SIMPLEX_SAMPLERS.get("exponential")
    Args:
        name (str): Registry name.
    """

    def __init__(self, name):
        self._name = name
        self._module_dict = dict()

    def __len__(self):
        return len(self._module_dict)

    def __contains__(self, key):
        return self.get(key) is not None

    def __repr__(self):
        return self.__class__.__name__ + f"(name={self._name}, items={list(self._module_dict)})"

    @property
    def name(self):
        return self._name

    @property
    def module_dict(self):
        return self._module_dict

    def get(self, key):
        return self._module_dict.get(key, None)

    def _register_module(self, module, module_name=None, force=False):
        if not (inspect.isclass(module) or inspect.isfunction(module)):
            raise TypeError(f"module must be a class or a function, but got {type(module)}")
        if module_name is None:
            module_name = module.__name__
        if not force and module_name in self._module_dict:
            raise KeyError(f"{module_name} is already registered in {self.name}")
        self._module_dict[module_name] = module

    def register_module(self, name=None, force=False, module=None):
        """Register a module, either as a decorator or with ``module=``.

        Args:
            name (str | None): The registered name; the ``__name__`` of the module by default.
            force (bool): Override an existing entry with the same name.
            module (type | function): Module to register directly.
        """
        if not isinstance(force, bool):
            raise TypeError(f"force must be a boolean, but got {type(force)}")
        if not (name is None or isinstance(name, str)):
            raise TypeError(f"name must be a str, but got {type(name)}")

        if module is not None:
            self._register_module(module, module_name=name, force=force)
            return module

        def _register(cls):
            self._register_module(cls, module_name=name, force=force)
            return cls

        return _register


def build_from_cfg(cfg, registry, default_args=None):
    """Look up ``cfg["type"]`` in ``registry`` and call it with the remaining keys.

    Args:
        cfg (dict | str): Config dict with the key "type", or a bare registered name.
        registry (:obj:`Registry`): The registry to search the type from.
        default_args (dict, optional): Default call arguments.
    Returns:
        object: The result of the call.
    """
    if cfg is None:
        return None
    if isinstance(cfg, str):
        cfg = dict(type=cfg)
    if not isinstance(cfg, dict):
        raise TypeError(f"cfg must be a dict, but got {type(cfg)}")
    if not isinstance(registry, Registry):
        raise TypeError(f"registry must be an entangle_atlas Registry object, but got {type(registry)}")
    if "type" not in cfg:
        raise KeyError(f'`cfg` must contain the key "type", but got {cfg}')

    args = dict(cfg)
    for name, value in (default_args or {}).items():
        args.setdefault(name, value)

    obj_type = args.pop("type")
    if isinstance(obj_type, str):
        obj_cls = registry.get(obj_type)
        if obj_cls is None:
            raise KeyError(f"{obj_type} is not in the {registry.name} registry")
    elif inspect.isclass(obj_type) or inspect.isfunction(obj_type):
        obj_cls = obj_type
    else:
        raise TypeError(f"type must be a str or valid type, but got {type(obj_type)}")
    return obj_cls(**args)
