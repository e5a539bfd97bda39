# services/feature_service.py
import logging

from config import CAPTURE_EXTENSION, DEFAULT_FILTER_ALPHA, DEFAULT_PEAK_FLOOR, DEFAULT_PEAK_SEPARATION_MS
from dsp.filters import check_alpha, lowpass, magnitude
from dsp.peaks import check_separation, detect_peaks
from errors import ValidationError
from features.extraction import extract_features, project
from ingest.capture_io import list_capture_files, read_capture_file, validate_capture
from nn.network import forward, predict
from preprocessing.scaler import apply

logger = logging.getLogger(__name__)


class FeatureService:
    """Turns captures into feature rows: validate, magnitude, low-pass, peaks, features."""
    def __init__(self, alpha=DEFAULT_FILTER_ALPHA, peak_separation_ms=DEFAULT_PEAK_SEPARATION_MS,
                 peak_floor=DEFAULT_PEAK_FLOOR):
        # Bad settings fail here, not once per capture
        self.alpha = check_alpha(alpha)
        self.peak_separation_ms = check_separation(peak_separation_ms)
        self.peak_floor = peak_floor

    def clean(self, capture):
        """Cleaned magnitude series of a validated capture."""
        return lowpass(magnitude(validate_capture(capture)), self.alpha)

    def featurize_capture(self, capture):
        series = self.clean(capture)
        peaks = detect_peaks(series, self.peak_separation_ms, self.peak_floor)
        return extract_features(series, peaks, capture.label)

    def featurize_corpus(self, in_dir):
        """Feature rows for every capture file in a directory, in file-name order.

        Files that fail to parse or validate are skipped with a warning; an
        empty result is an error.
        """
        paths = list_capture_files(in_dir, CAPTURE_EXTENSION)
        rows, skipped = [], 0
        for path in paths:
            try:
                rows.append(self.featurize_capture(read_capture_file(path)))
            except ValidationError as e:
                skipped += 1
                logger.warning("Skipping %s: %s: %s", path, e.kind, e)
        if not rows:
            raise ValidationError(f"no valid captures in {in_dir} ({skipped} rejected)")
        logger.info("Featurized %d captures from %s (%d skipped)", len(rows), in_dir, skipped)
        return rows

    def classify(self, model, capture):
        """Predicted ADL and class probabilities for one capture."""
        features = self.featurize_capture(capture)
        x = apply(model.scaler, project(features, model.variant))
        return predict(model, x), forward(model, x)
