from .records import (
    CSV_HEADER,
    survey_filename,
    records_to_rows,
    rows_to_records,
    write_file,
    write_records_csv,
    write_records_json,
    load_records_csv,
    load_records_json,
    write_anomalies,
)
from .manifest import RunManifest, manifest_filename
from .plots import FIGURE_FAMILIES, plot_family, emit_plots
