# config.py

# Capture acquisition (phone in the pocket, sample every 10 ms, 5 s windows)
NOMINAL_RATE_HZ = 100.0
NOMINAL_DURATION_MS = 5000.0
DURATION_TOLERANCE = 0.10  # +/- fraction of NOMINAL_DURATION_MS
GAP_TOLERANCE = 0.20  # +/- fraction of the nominal inter-sample gap
CAPTURE_EXTENSION = ".txt"

# Data cleaning
DEFAULT_FILTER_ALPHA = 0.1  # ~1.7 Hz cutoff at 100 Hz

# Peak detection
DEFAULT_PEAK_SEPARATION_MS = 250.0
DEFAULT_PEAK_FLOOR = 0.0  # threshold = mean + floor * std

# Feature table
FEATURE_COLUMNS = [
    "d1", "d2", "d3", "d4", "d5",
    "pk_avg", "pk_std", "pk_var", "pk_med",
    "raw_std", "raw_avg", "raw_max", "raw_min", "raw_var", "raw_med",
]
LABEL_COLUMN = "label"
FEATURE_DIGITS = 17

# Network presets
DEFAULT_SHALLOW_LEARNING_RATE = 0.01
DEFAULT_DEEP_LEARNING_RATE = 0.005
DEFAULT_L2_LAMBDA = 1e-4
DEEP_HIDDEN_LAYERS = [32, 16, 8]
NUM_CLASSES = 5

# Model file
MODEL_MAGIC = b"ADLM"
MODEL_VERSION = 1

# Gradient checking
GRADCHECK_STEP = 1e-5
GRADCHECK_TOLERANCE = 1e-4
DEFAULT_GRADCHECK_TRIALS = 100

# Experiment grid
DEFAULT_PRESETS = ["mlp_bp", "ff_bp", "deep"]
DEFAULT_VARIANTS = ["D1", "D2", "D3", "D4", "D5"]
DEFAULT_NORMALIZATIONS = ["raw", "normalized"]
DEFAULT_BUDGETS = [10_000, 20_000, 40_000]  # desk-scale stand-ins for 1M / 2M / 4M updates
DEFAULT_TEST_FRACTION = 0.3
DEFAULT_MASTER_SEED = 20170902
LOSS_HISTORY_POINTS = 1000  # loss samples kept per training run
ACCURACY_DECIMALS = 6

# Synthetic corpus
GRAVITY = 9.81
DEFAULT_PER_CLASS = 200
DEFAULT_SYNTH_NOISE_STD = 0.4
DEFAULT_SYNTH_JITTER = 0.05
HARMONIC_WEIGHT = 0.3
# label name -> (frequency Hz, vertical amplitude, vertical bias, noise std)
DEFAULT_SYNTH_CLASSES = {
    "Running": (2.9, 6.0, 0.0, DEFAULT_SYNTH_NOISE_STD),
    "Walking": (1.9, 2.5, 0.0, DEFAULT_SYNTH_NOISE_STD),
    "GoingUpstairs": (1.6, 3.0, 0.4, DEFAULT_SYNTH_NOISE_STD),
    "GoingDownstairs": (1.7, 3.5, -0.4, DEFAULT_SYNTH_NOISE_STD),
    "Standing": (0.0, 0.15, 0.0, 0.1),
}
# Horizontal axes relative to the vertical amplitude
SYNTH_X_RATIO = 0.3
SYNTH_Y_RATIO = 0.2

# Reports
GRID_FILE = "grid.csv"
BEST_FILE = "best.csv"
FIGURE_PRESETS = {"mlp_bp": 1, "ff_bp": 2, "deep": 3}
