"""Exception hierarchy shared across the pipeline stages."""

from __future__ import annotations


class PipelineError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(PipelineError):
    """Invalid configuration (bad combination of flags, missing paths, ...)."""


# --- corpus ingestion ---------------------------------------------------


class DetectorUnavailable(PipelineError):
    """No language detector is configured under the requested name."""


class UndecidableText(PipelineError):
    """The language detector returned no candidate for a text."""


class InsufficientData(PipelineError):
    """Fewer qualifying records than the requested sample size."""

    def __init__(self, available: int, requested: int):
        super().__init__(f"only {available} qualifying records, need {requested}")
        self.available = available
        self.requested = requested


# --- script mixing ------------------------------------------------------


class UnsupportedScript(PipelineError):
    """Transliteration input is not in a supported Indic script."""


class InsufficientIndicTexts(PipelineError):
    """Fewer Indic-script texts than the mix ratio requires."""

    def __init__(self, available: int, required: int):
        super().__init__(f"only {available} Indic-script texts, need {required}")
        self.available = available
        self.required = required


# --- labeled datasets ---------------------------------------------------


class UnknownLabel(PipelineError):
    """A raw label string has no canonical mapping in the task schema."""

    def __init__(self, raw: str, row: int):
        super().__init__(f"unknown label {raw!r} at row {row}")
        self.raw = raw
        self.row = row


class MalformedCsv(PipelineError):
    """A CSV row cannot be parsed into (text, label)."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EmptyClass(PipelineError):
    """A schema label has zero rows; oversampling is undefined."""

    def __init__(self, label: str):
        super().__init__(f"class {label!r} has no rows")
        self.label = label


# --- training -----------------------------------------------------------


class EmptyCorpus(PipelineError):
    """Retraining was requested on a corpus with no texts."""


class EmptyRunLog(PipelineError):
    """Checkpoint selection over an empty record list."""


class SchemaMismatch(PipelineError):
    """Train and validation datasets disagree on task schema."""


class BackendFailure(PipelineError):
    """A trainer backend failed; partial checkpoint logs are preserved."""


# --- metrics ------------------------------------------------------------


class LengthMismatch(PipelineError):
    """Gold and predicted label lists differ in length."""


class EmptyInput(PipelineError):
    """A metric was requested over zero instances."""


class DuplicateCell(PipelineError):
    """Two evaluation reports map to the same comparison-table cell."""
