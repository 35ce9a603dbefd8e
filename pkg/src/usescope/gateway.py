"""Provider-agnostic chat-completion client with record/replay transcripts.

The wire contract is the OpenAI-compatible ``POST /chat/completions`` shape;
endpoint and key come from configuration. Every request has a content digest
over its canonical JSON form, and transcripts are stored one file per digest
so a recorded run replays byte-identically with no network.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import httpx

from .errors import ProviderError, TranscriptMiss, TransportError, ValidationError
from .jsonutil import atomic_write_text, canonical_json, stable_json
from .model import utc_now_iso


class ResponseHint(str, Enum):
    FREE_TEXT = "free_text"
    OBJECT_NOTATION = "object_notation"


class GatewayMode(str, Enum):
    LIVE = "live"
    REPLAY = "replay"
    RECORD_LIVE = "record"


@dataclass(frozen=True)
class ChatRequest:
    system_text: str
    user_text: str
    model_name: str
    temperature: float = 0.0
    response_hint: ResponseHint = ResponseHint.FREE_TEXT

    def __post_init__(self):
        if not self.system_text.strip():
            raise ValidationError("system_text must be non-empty")
        if not self.user_text.strip():
            raise ValidationError("user_text must be non-empty")
        if not self.model_name.strip():
            raise ValidationError("model_name must be non-empty")
        if not 0.0 <= self.temperature <= 2.0:
            raise ValidationError(f"temperature {self.temperature} outside [0, 2]")
        if not isinstance(self.response_hint, ResponseHint):
            object.__setattr__(self, "response_hint", ResponseHint(self.response_hint))

    def to_dict(self) -> dict:
        return {
            "system_text": self.system_text,
            "user_text": self.user_text,
            "model_name": self.model_name,
            "temperature": self.temperature,
            "response_hint": self.response_hint.value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChatRequest":
        return cls(
            system_text=data["system_text"],
            user_text=data["user_text"],
            model_name=data["model_name"],
            temperature=data["temperature"],
            response_hint=ResponseHint(data["response_hint"]),
        )


def request_digest(request: ChatRequest) -> str:
    """Content hash of the canonicalized request.

    Canonical JSON is key-sorted, so the digest is insensitive to field
    ordering but changes with any semantic field, temperature included.
    """
    return hashlib.sha256(canonical_json(request.to_dict()).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Transcript:
    request: ChatRequest
    response_text: str
    recorded_at: str
    request_digest: str

    def __post_init__(self):
        expected = request_digest(self.request)
        if self.request_digest != expected:
            raise ValidationError(
                f"transcript digest {self.request_digest} does not match recomputed {expected}"
            )

    def to_dict(self) -> dict:
        return {
            "request_digest": self.request_digest,
            "request": self.request.to_dict(),
            "response_text": self.response_text,
            "recorded_at": self.recorded_at,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Transcript":
        return cls(
            request=ChatRequest.from_dict(data["request"]),
            response_text=data["response_text"],
            recorded_at=data["recorded_at"],
            request_digest=data["request_digest"],
        )

    @classmethod
    def record(cls, request: ChatRequest, response_text: str) -> "Transcript":
        return cls(
            request=request,
            response_text=response_text,
            recorded_at=utc_now_iso(),
            request_digest=request_digest(request),
        )


class TranscriptStore:
    """One transcript file per request digest under a run-scoped directory.

    Writes are atomic (temp + rename); concurrent identical live requests may
    both record, and last write wins safely because the key is the content
    digest of the request.
    """

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def path(self, digest: str) -> Path:
        return self.directory / f"{digest}.json"

    def save(self, transcript: Transcript) -> Path:
        path = self.path(transcript.request_digest)
        atomic_write_text(path, stable_json(transcript.to_dict()))
        return path

    def load(self, digest: str) -> Transcript:
        path = self.path(digest)
        if not path.exists():
            raise TranscriptMiss(digest)
        import json

        return Transcript.from_dict(json.loads(path.read_text(encoding="utf-8")))

    def digests(self) -> list[str]:
        if not self.directory.exists():
            return []
        return sorted(p.stem for p in self.directory.glob("*.json"))


class ChatGateway:
    """Shareable chat-completion client with retry and replay.

    Retries apply only to transport failures and 5xx responses, with
    exponential backoff, at most ``max_retries`` extra attempts. A missing
    transcript in replay mode is never retried.
    """

    def __init__(
        self,
        endpoint: str = "",
        api_key: str = "",
        transcripts: TranscriptStore | None = None,
        max_retries: int = 3,
        timeout: float = 60.0,
        backoff_seconds: float = 0.5,
        transport: httpx.BaseTransport | None = None,
    ):
        self.endpoint = endpoint.rstrip("/")
        self.api_key = api_key
        self.transcripts = transcripts
        self.max_retries = max_retries
        self.timeout = timeout
        self.backoff_seconds = backoff_seconds
        self._transport = transport
        self._client: httpx.Client | None = None

    def _http(self) -> httpx.Client:
        if self._client is None:
            self._client = httpx.Client(timeout=self.timeout, transport=self._transport)
        return self._client

    def with_transcripts(self, transcripts: TranscriptStore) -> "ChatGateway":
        """A copy of this gateway bound to a (run-scoped) transcript store."""
        return ChatGateway(
            endpoint=self.endpoint,
            api_key=self.api_key,
            transcripts=transcripts,
            max_retries=self.max_retries,
            timeout=self.timeout,
            backoff_seconds=self.backoff_seconds,
            transport=self._transport,
        )

    def close(self) -> None:
        if self._client is not None:
            self._client.close()
            self._client = None

    def complete(self, request: ChatRequest, mode: GatewayMode | str) -> str:
        mode = GatewayMode(mode)
        if mode is GatewayMode.REPLAY:
            if self.transcripts is None:
                raise TranscriptMiss(request_digest(request))
            return self.transcripts.load(request_digest(request)).response_text
        text = self._complete_live(request)
        if mode is GatewayMode.RECORD_LIVE and self.transcripts is not None:
            self.transcripts.save(Transcript.record(request, text))
        return text

    def _complete_live(self, request: ChatRequest) -> str:
        if not self.endpoint:
            raise TransportError("no completion endpoint configured")
        url = f"{self.endpoint}/chat/completions"
        body = {
            "model": request.model_name,
            "messages": [
                {"role": "system", "content": request.system_text},
                {"role": "user", "content": request.user_text},
            ],
            "temperature": request.temperature,
        }
        if request.response_hint is ResponseHint.OBJECT_NOTATION:
            body["response_format"] = {"type": "json_object"}
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"

        last_error: Exception | None = None
        for attempt in range(self.max_retries + 1):
            if attempt:
                time.sleep(self.backoff_seconds * (2 ** (attempt - 1)))
            try:
                response = self._http().post(url, json=body, headers=headers)
            except httpx.HTTPError as exc:
                last_error = exc
                continue
            if response.status_code >= 500:
                last_error = ProviderError(
                    f"provider returned {response.status_code}", response.status_code
                )
                continue
            if response.status_code != 200:
                raise ProviderError(
                    f"provider returned {response.status_code}: {response.text[:200]}",
                    response.status_code,
                )
            try:
                return response.json()["choices"][0]["message"]["content"]
            except (KeyError, IndexError, ValueError) as exc:
                raise ProviderError(f"unexpected provider response shape: {exc}", 200) from exc
        if isinstance(last_error, ProviderError):
            raise last_error
        raise TransportError(
            f"request failed after {self.max_retries + 1} attempts: {last_error}"
        ) from last_error
