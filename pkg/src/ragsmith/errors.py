"""Exception hierarchy shared across the package.

Every error raised on purpose derives from RagsmithError so callers (and
the CLI) can catch one type and map it to a nonzero exit code.
"""

from __future__ import annotations


class RagsmithError(Exception):
    """Base class for all errors raised by this package."""


# corpus


class RootMissing(RagsmithError):
    """Corpus root directory does not exist or is not readable."""


class EmptyCorpus(RagsmithError):
    """No documents matched the configured include globs."""


class DuplicateRequirementId(RagsmithError):
    """Two requirement records share an id."""


class MalformedRecord(RagsmithError):
    """A requirement record is missing fields or has the wrong shape."""


# chunking


class InvalidOverlap(RagsmithError):
    """Fixed-size chunking called with overlap outside [0, size)."""


class UnbalancedBraces(RagsmithError):
    """Brace depth did not return to zero at end of document."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(message)
        self.position = position


class StrategyRoleMismatch(RagsmithError):
    """Chunking strategy applied to a document role it does not support."""


# embedding / indexing


class DimensionMismatch(RagsmithError):
    """Vectors of different dimensionality were combined."""


class EmptyIndex(RagsmithError):
    """An index with zero entries was searched or exported."""


class DuplicateChunkId(RagsmithError):
    """Two chunks with the same chunk_id were offered to an index."""


class HttpError(RagsmithError):
    """A remote endpoint returned a non-success status or a bad payload."""

    def __init__(self, message: str, status: int | None = None, body_excerpt: str = "") -> None:
        super().__init__(message)
        self.status = status
        self.body_excerpt = body_excerpt


class RequestTimeout(RagsmithError):
    """A remote call exceeded its deadline on every attempt."""


class DimsDrift(RagsmithError):
    """A remote embedding response changed dimensionality mid-session."""


# generation


class InvalidTemplate(RagsmithError):
    """Prompt template is missing placeholders or has them out of order."""


class BudgetTooSmall(RagsmithError):
    """Character budget cannot fit even the context-free prompt."""


class NoCodeBlock(RagsmithError):
    """LLM response contained no fenced code block to extract."""


class EmptyCompletion(RagsmithError):
    """LLM returned an empty or whitespace-only completion."""


# validation


class CommandSpawnError(RagsmithError):
    """A validation stage command could not be spawned (binary missing)."""


class EmptyReportSet(RagsmithError):
    """Aggregation over zero reports or records."""


# evaluation


class EmptyRelevantSet(RagsmithError):
    """Recall is undefined for an empty relevant set."""


class UnresolvableChunkId(RagsmithError):
    """Ground-truth chunk id not present in the index."""


class MalformedRow(RagsmithError):
    """Review-ledger CSV row failed to parse."""


class InvalidDecision(RagsmithError):
    """Review decision outside {accept, modify, reject}."""


class InvalidDistribution(RagsmithError):
    """Acceptance distribution does not sum to 1 or has negative entries."""


# configuration


class ConfigError(RagsmithError):
    """Config file failed validation (unknown keys, missing paths, bad values)."""
