# ingest/capture_io.py
import logging
import math
import os

import numpy as np

from config import DURATION_TOLERANCE, GAP_TOLERANCE, NOMINAL_DURATION_MS
from errors import (
    DurationOutOfRangeError, IrregularSamplingError, MalformedLineError,
    MissingHeaderError, NonMonotonicTimestampError, UnknownLabelError,
)
from models.adl_label import AdlLabel
from models.capture import Capture

logger = logging.getLogger(__name__)


def _decode(data):
    if isinstance(data, str):
        return data
    try:
        return bytes(data).decode("utf-8")
    except UnicodeDecodeError as e:
        line = bytes(data)[:e.start].count(b"\n") + 1
        raise MalformedLineError("not valid UTF-8", line=line) from None


def _parse_header(line):
    """Return (label, rate_hz) from '# adl=<name> rate_hz=<number>'."""
    if not line.startswith("#"):
        raise MissingHeaderError("first line must be '# adl=<name> rate_hz=<number>'", line=1)
    fields = {}
    for token in line[1:].split():
        if "=" in token:
            key, value = token.split("=", 1)
            fields[key.strip()] = value.strip()
    if "adl" not in fields or "rate_hz" not in fields:
        raise MissingHeaderError("header needs both adl= and rate_hz=", line=1)
    try:
        label = AdlLabel.from_name(fields["adl"])
    except UnknownLabelError as e:
        raise UnknownLabelError(e.detail, line=1) from None
    try:
        rate_hz = float(fields["rate_hz"])
    except ValueError:
        raise MalformedLineError(f"bad rate_hz '{fields['rate_hz']}'", line=1) from None
    if not (math.isfinite(rate_hz) and rate_hz > 0):
        raise MalformedLineError(f"rate_hz must be positive, got {rate_hz}", line=1)
    return label, rate_hz


def parse_capture(data):
    """Parse a capture file (bytes or str) into a Capture.

    Raises MissingHeaderError, UnknownLabelError, MalformedLineError or
    NonMonotonicTimestampError, each carrying the 1-based line number.
    """
    text = _decode(data)
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise MissingHeaderError("empty capture", line=1)
    label, rate_hz = _parse_header(lines[0].strip())

    t_ms, xyz = [], []
    last_line = 1
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        last_line = lineno
        parts = line.split(",")
        if len(parts) != 4:
            raise MalformedLineError(f"expected t_ms,x,y,z, got {len(parts)} fields", line=lineno)
        try:
            t, x, y, z = (float(p) for p in parts)
        except ValueError:
            raise MalformedLineError(f"non-numeric field in '{line}'", line=lineno) from None
        if not all(math.isfinite(v) for v in (t, x, y, z)):
            raise MalformedLineError("non-finite value", line=lineno)
        if t < 0:
            raise MalformedLineError(f"negative timestamp {t}", line=lineno)
        if t_ms and t <= t_ms[-1]:
            raise NonMonotonicTimestampError(f"t_ms {t} does not exceed {t_ms[-1]}", line=lineno)
        t_ms.append(t)
        xyz.append((x, y, z))

    if len(t_ms) < 2:
        raise MalformedLineError(f"need at least 2 samples, got {len(t_ms)}", line=last_line)
    return Capture(label, rate_hz, t_ms, xyz)


def serialize_capture(capture):
    """Inverse of parse_capture; floats use shortest round-trip text."""
    out = [f"# adl={capture.label.name} rate_hz={float(capture.rate_hz)!r}"]
    for t, x, y, z in capture.samples:
        out.append(f"{t!r},{x!r},{y!r},{z!r}")
    return ("\n".join(out) + "\n").encode("utf-8")


def validate_capture(capture):
    """Pass through captures with nominal duration and regular sampling."""
    duration = capture.duration_ms
    low = NOMINAL_DURATION_MS * (1 - DURATION_TOLERANCE)
    high = NOMINAL_DURATION_MS * (1 + DURATION_TOLERANCE)
    if not low <= duration <= high:
        raise DurationOutOfRangeError(
            f"duration {duration:.1f} ms outside [{low:.0f}, {high:.0f}]")

    nominal_gap = 1000.0 / capture.rate_hz
    median_gap = float(np.median(np.diff(capture.t_ms)))
    if abs(median_gap - nominal_gap) > GAP_TOLERANCE * nominal_gap:
        raise IrregularSamplingError(
            f"median gap {median_gap:.3f} ms vs nominal {nominal_gap:.3f} ms")
    return capture


def read_capture_file(path):
    with open(path, "rb") as fh:
        return parse_capture(fh.read())


def write_capture_file(capture, path):
    with open(path, "wb") as fh:
        fh.write(serialize_capture(capture))
    logger.debug("Wrote %s to %s", capture, path)


def list_capture_files(directory, extension):
    """Capture files in a directory, sorted by name for a stable corpus order."""
    names = sorted(n for n in os.listdir(directory) if n.endswith(extension))
    return [os.path.join(directory, n) for n in names]
