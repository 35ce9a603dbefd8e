"""Embedding providers and the cosine-similarity primitive.

Three bindings sit behind one interface: a remote embeddings endpoint, a
local sentence-transformer runtime, and a deterministic hashed bag-of-words
provider that the test suite and offline replays use. Vectors are unit-norm
float32; similarities are float64 dot products quantized to six decimal
places so threshold comparisons are reproducible across platforms.
"""

from __future__ import annotations

import hashlib
import re

import numpy as np

from .errors import EmbeddingError, EmptyText

SIMILARITY_DECIMALS = 6

_TOKEN_RE = re.compile(r"[a-z0-9]+")


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine of two unit vectors, quantized to 6 decimals (within the 1e-6
    contract). Exact-duplicate texts therefore compare equal to 1.0."""
    return round(float(np.dot(a.astype(np.float64), b.astype(np.float64))),
                 SIMILARITY_DECIMALS)


def _normalize(values: np.ndarray) -> np.ndarray:
    vec = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(vec)):
        raise EmbeddingError("embedding has non-finite entries")
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:
        raise EmbeddingError("embedding has zero norm")
    return (vec / norm).astype(np.float32)


class HashedBowProvider:
    """Deterministic hashed bag-of-words embeddings.

    Tokens are lowercased alphanumeric runs; each token is mapped to a
    bucket and sign by its sha256 digest, counts are accumulated and the
    vector unit-normalized. Stable across platforms and processes by
    construction (no salted hashing).
    """

    def __init__(self, dimension: int = 64):
        if dimension <= 0:
            raise EmbeddingError("dimension must be positive")
        self.dimension = dimension
        self.tag = f"hashed-bow-{dimension}"

    def embed(self, text: str) -> np.ndarray:
        if not text or not text.strip():
            raise EmptyText("cannot embed empty text")
        tokens = _TOKEN_RE.findall(text.lower())
        if not tokens:
            raise EmptyText("text has no embeddable tokens")
        values = np.zeros(self.dimension, dtype=np.float64)
        for token in tokens:
            digest = hashlib.sha256(token.encode("utf-8")).digest()
            bucket = int.from_bytes(digest[:4], "big") % self.dimension
            sign = 1.0 if digest[4] % 2 == 0 else -1.0
            values[bucket] += sign
        if not values.any():
            # Opposite-signed tokens can cancel; nudge by first token's bucket.
            digest = hashlib.sha256(tokens[0].encode("utf-8")).digest()
            values[int.from_bytes(digest[:4], "big") % self.dimension] = 1.0
        return _normalize(values)


class RemoteEmbeddingProvider:
    """OpenAI-compatible ``POST /embeddings`` binding."""

    def __init__(self, endpoint: str, api_key: str = "", model: str = "text-embedding-3-small",
                 timeout: float = 60.0, transport=None):
        import httpx

        self.endpoint = endpoint.rstrip("/")
        self.model = model
        self.tag = f"remote-{model}"
        self.dimension: int | None = None
        self._headers = {"Content-Type": "application/json"}
        if api_key:
            self._headers["Authorization"] = f"Bearer {api_key}"
        self._client = httpx.Client(timeout=timeout, transport=transport)

    def embed(self, text: str) -> np.ndarray:
        if not text or not text.strip():
            raise EmptyText("cannot embed empty text")
        response = self._client.post(
            f"{self.endpoint}/embeddings",
            json={"model": self.model, "input": text},
            headers=self._headers,
        )
        if response.status_code != 200:
            raise EmbeddingError(f"embedding endpoint returned {response.status_code}")
        try:
            values = response.json()["data"][0]["embedding"]
        except (KeyError, IndexError, ValueError) as exc:
            raise EmbeddingError(f"unexpected embedding response shape: {exc}") from exc
        vec = _normalize(np.asarray(values))
        if self.dimension is None:
            self.dimension = vec.shape[0]
        elif vec.shape[0] != self.dimension:
            raise EmbeddingError(
                f"provider changed dimension: {vec.shape[0]} != {self.dimension}"
            )
        return vec


class LocalModelProvider:
    """sentence-transformers binding; requires the model weights locally."""

    def __init__(self, model_name: str = "all-mpnet-base-v2"):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise EmbeddingError("sentence-transformers is not installed") from exc
        self._model = SentenceTransformer(model_name)
        self.tag = f"local-{model_name}"
        self.dimension = self._model.get_sentence_embedding_dimension()

    def embed(self, text: str) -> np.ndarray:
        if not text or not text.strip():
            raise EmptyText("cannot embed empty text")
        return _normalize(self._model.encode([text])[0])


def get_provider(spec: str = "hashed", **kwargs):
    """Factory over the three bindings: ``hashed[:dim]``, ``remote``, ``local[:name]``."""
    kind, _, arg = spec.partition(":")
    if kind == "hashed":
        return HashedBowProvider(dimension=int(arg) if arg else 64)
    if kind == "remote":
        return RemoteEmbeddingProvider(**kwargs)
    if kind == "local":
        return LocalModelProvider(model_name=arg) if arg else LocalModelProvider()
    raise EmbeddingError(f"unknown embedding provider {spec!r}")
