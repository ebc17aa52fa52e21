import os, os.path as osp
from pathlib import Path


def is_filepath(x):
    return isinstance(x, (str, Path))


def check_files_exist(filenames, msg_tmpl='file "{}" does not exist'):
    if is_filepath(filenames):
        filenames = [filenames]
    for filename in filenames:
        if not osp.isfile(str(filename)):
            raise FileNotFoundError(msg_tmpl.format(filename))


def mkdir_or_exist(dir_name, mode=0o777):
    if dir_name == "":
        return
    dir_name = osp.expanduser(str(dir_name))
    os.makedirs(dir_name, mode=mode, exist_ok=True)
