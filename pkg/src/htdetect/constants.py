"""Shared constants: language conditions, experimental conditions, defaults."""

from __future__ import annotations

import datetime as _dt

# The five shared-task language conditions, in table order.
LANGUAGE_CONDITIONS = ("english", "hindi", "malayalam", "spanish", "tamil")

# Conditions whose native script is Indic (eligible for script-mixing).
INDIC_CONDITIONS = ("hindi", "malayalam", "tamil")

# Experimental conditions a trained model can trace to.
EXPERIMENT_CONDITIONS = ("baseline", "retrained", "script-mixed")

# Detector tag -> language condition.
LANG_TAG_TO_CONDITION = {
    "en": "english",
    "es": "spanish",
    "hi": "hindi",
    "ml": "malayalam",
    "ta": "tamil",
}

# Corpus-construction defaults.
DEFAULT_MIN_CHARS = 50
DEFAULT_SAMPLE_SIZE = 50_000
DEFAULT_COUNTRY = "IN"
DEFAULT_WINDOW_START = _dt.date(2019, 1, 1)
DEFAULT_WINDOW_END = _dt.date(2019, 12, 31)
DEFAULT_CONFIDENCE_THRESHOLD = 0.90
DEFAULT_MIX_RATIO = 0.20

# Training defaults.
DEFAULT_RETRAIN_EPOCHS = 4
DEFAULT_FINETUNE_EPOCHS = 8
DEFAULT_EVAL_EVERY_STEPS = 500
DEFAULT_LEARNING_RATE = 4e-5
