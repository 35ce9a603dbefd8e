"""Typed errors raised across the pipeline.

Every error carries enough context (field names, offending fragments,
digests) to be actionable in reports and API responses.
"""

from __future__ import annotations


class UsescopeError(Exception):
    """Base class for all package errors."""

    code = "error"

    def payload(self) -> dict:
        """Machine-readable form used by the API and the CLI."""
        return {"error": self.code, "detail": str(self)}


# --- domain model ---------------------------------------------------------

class ValidationError(UsescopeError):
    code = "validation"


class DuplicateDomain(ValidationError):
    code = "duplicate_domain"


class InvalidProvenance(ValidationError):
    code = "invalid_provenance"


class EmptyCatalog(ValidationError):
    code = "empty_catalog"


# --- llm gateway ----------------------------------------------------------

class GatewayError(UsescopeError):
    code = "gateway"


class TransportError(GatewayError):
    code = "transport"


class ProviderError(GatewayError):
    code = "provider"

    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status

    def payload(self) -> dict:
        out = super().payload()
        out["status"] = self.status
        return out


class TranscriptMiss(GatewayError):
    code = "transcript_miss"

    def __init__(self, digest: str):
        super().__init__(f"no transcript recorded for request digest {digest}")
        self.digest = digest


# --- generation stage -----------------------------------------------------

class EmptyTechnology(ValidationError):
    code = "empty_technology"


class ParseError(UsescopeError):
    """Base for structured-output parse failures; carries the bad fragment."""

    code = "parse"

    def __init__(self, message: str, fragment: str = ""):
        super().__init__(message)
        self.fragment = fragment

    def payload(self) -> dict:
        out = super().payload()
        if self.fragment:
            out["fragment"] = self.fragment
        return out


class MalformedOutput(ParseError):
    code = "malformed_output"


class IncompleteUse(ParseError):
    code = "incomplete_use"

    def __init__(self, index: int, field: str, fragment: str = ""):
        super().__init__(f"record {index} is missing field {field!r}", fragment)
        self.index = index
        self.field = field


class UnknownLabel(ParseError):
    code = "unknown_label"

    def __init__(self, index: int, label: str, fragment: str = ""):
        super().__init__(f"record {index} has unknown realisticness label {label!r}", fragment)
        self.index = index
        self.label = label


# --- risk labelling -------------------------------------------------------

class IncompleteCorpus(ValidationError):
    code = "incomplete_corpus"


class UnknownClassification(ParseError):
    code = "unknown_classification"

    def __init__(self, label: str, fragment: str = ""):
        super().__init__(f"unknown risk classification {label!r}", fragment)
        self.label = label


class MissingReasoning(ParseError):
    code = "missing_reasoning"


class UncitedHighSeverity(ParseError):
    code = "uncited_high_severity"


# --- overlooked filter ----------------------------------------------------

class EmbeddingError(UsescopeError):
    code = "embedding"


class EmptyText(EmbeddingError):
    code = "empty_text"


class EmptyCorpus(UsescopeError):
    code = "empty_corpus"


# --- evaluation -----------------------------------------------------------

class ShapeError(UsescopeError):
    code = "shape"


class MissingDecision(UsescopeError):
    code = "missing_decision"

    def __init__(self, gt_id: str):
        super().__init__(f"no coverage decision recorded for ground-truth use {gt_id}")
        self.gt_id = gt_id


class DegenerateMarginals(UsescopeError):
    code = "degenerate_marginals"


class EmptyDistribution(UsescopeError):
    code = "empty_distribution"


# --- store / api ----------------------------------------------------------

class StoreError(UsescopeError):
    code = "store"


class RunExists(StoreError):
    code = "run_exists"


class UnknownRun(StoreError):
    code = "unknown_run"


class UnknownUse(StoreError):
    code = "unknown_use"


class DuplicateCard(StoreError):
    code = "duplicate_card"
