# ingest/feature_table.py
import csv
import io

from config import FEATURE_COLUMNS, FEATURE_DIGITS, LABEL_COLUMN
from errors import HeaderMismatchError, MalformedLineError, RowArityMismatchError, UnknownLabelError
from models.adl_label import AdlLabel
from models.feature_vector import FeatureVector

HEADER = FEATURE_COLUMNS + [LABEL_COLUMN]


def _format(value):
    return format(float(value), f".{FEATURE_DIGITS}g")


def write_feature_table(rows):
    """Serialize FeatureVectors to CSV bytes with the fixed header."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)
    for row in rows:
        if len(row.values) != len(FEATURE_COLUMNS):
            raise RowArityMismatchError(f"row has {len(row.values)} values")
        writer.writerow([_format(v) for v in row.values] + [row.label.name])
    return buffer.getvalue().encode("utf-8")


def read_feature_table(data):
    """Parse CSV bytes written by write_feature_table back into FeatureVectors."""
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != HEADER:
        raise HeaderMismatchError(f"expected header {','.join(HEADER)}", line=1)

    rows = []
    for record in reader:
        lineno = reader.line_num
        if not record:
            continue
        if len(record) != len(HEADER):
            raise RowArityMismatchError(
                f"expected {len(HEADER)} columns, got {len(record)}", line=lineno)
        try:
            values = [float(v) for v in record[:-1]]
        except ValueError:
            raise MalformedLineError("non-numeric feature value", line=lineno) from None
        try:
            label = AdlLabel.from_name(record[-1])
        except UnknownLabelError as e:
            raise UnknownLabelError(e.detail, line=lineno) from None
        rows.append(FeatureVector(values, label))
    return rows


def load_feature_table(path):
    with open(path, "rb") as fh:
        return read_feature_table(fh.read())


def save_feature_table(rows, path):
    with open(path, "wb") as fh:
        fh.write(write_feature_table(rows))
