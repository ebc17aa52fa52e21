import csv, io
from .base import BaseFileHandler


class CSVHandler(BaseFileHandler):
    """Rows of a csv file as lists of strings; with ``as_dict=True`` a list of dicts keyed by the header."""

    def load_from_fileobj(self, file, as_dict=False, **kwargs):
        if as_dict:
            return list(csv.DictReader(file, **kwargs))
        return list(csv.reader(file, **kwargs))

    def dump_to_fileobj(self, obj, file, **kwargs):
        kwargs.setdefault("lineterminator", "\n")
        csv_writer = csv.writer(file, **kwargs)
        csv_writer.writerows(obj)

    def dump_to_str(self, obj, **kwargs):
        output = io.StringIO()
        self.dump_to_fileobj(obj, output, **kwargs)
        return output.getvalue()
