from .base import BaseFileHandler


class TxtHandler(BaseFileHandler):
    """Plain text; loads the list of lines without trailing newlines."""

    def load_from_fileobj(self, file, **kwargs):
        return file.read().splitlines()

    def dump_to_fileobj(self, obj, file, **kwargs):
        file.write(self.dump_to_str(obj))

    def dump_to_str(self, obj, **kwargs):
        if isinstance(obj, (list, tuple)):
            return "".join(f"{line}\n" for line in obj)
        return str(obj)
