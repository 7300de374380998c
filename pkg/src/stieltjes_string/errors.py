"""Exception types raised by the pipeline.

Every domain error carries the pipeline stage where it was detected and the
offending value, so that the CLI can print a deterministic one-line message.
"""

from __future__ import annotations

from typing import Any


class PipelineError(ValueError):
    """Base class for domain errors (bad input data, not bugs)."""

    default_message = "pipeline error"
    default_stage = "pipeline"

    def __init__(self, message: str | None = None, *, value: Any = None, stage: str | None = None):
        self.message = message or self.default_message
        self.value = value
        self.stage = stage or self.default_stage
        super().__init__(self.message)

    def describe(self) -> str:
        text = f"{self.stage}: {self.message}"
        if self.value is not None:
            text += f" (value: {self.value})"
        return text


class InvalidMeasure(PipelineError):
    default_message = "invalid measure"
    default_stage = "moments"


class NoHerglotzExpansion(PipelineError):
    default_message = "no Herglotz-compatible expansion"
    default_stage = "moments"


class InconsistentMomentData(PipelineError):
    default_message = "inconsistent moment data"
    default_stage = "hankel"


class InvalidString(PipelineError):
    default_message = "invalid string"
    default_stage = "forward"


class EvaluationAtPole(PipelineError):
    default_message = "evaluation at pole/critical point"
    default_stage = "forward"


class RatioUndefined(PipelineError):
    default_message = "ratio undefined at k"
    default_stage = "expansion"


class InternalInconsistency(RuntimeError):
    """A coefficient law failed on data the pipeline itself produced.

    This signals a bug in the implementation, never bad input.
    """

    def __init__(self, law: str, detail: Any = None):
        self.law = law
        self.detail = detail
        super().__init__(f"internal inconsistency: {law}" + (f" ({detail})" if detail is not None else ""))
