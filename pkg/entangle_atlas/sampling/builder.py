from ..utils.meta import Registry, build_from_cfg

SIMPLEX_SAMPLERS = Registry("simplex sampler")


def build_simplex_sampler(cfg, default_args=None):
    return build_from_cfg(cfg, SIMPLEX_SAMPLERS, default_args)
