"""Pluggable classifier and generator backends.

Wire contracts (JSON over HTTP):
  classifier: POST {premise, hypothesis} -> {label: suitable|unsuitable,
              confidence: float}
  generator:  POST {prompt, beam_size, max_target_len} -> {text: str}

Two in-process stub generators (``stub:echo`` and ``stub:template``) keep the
whole pipeline runnable with no model server. Transport failures retry with
exponential backoff; contract violations fail immediately.
"""

from __future__ import annotations

import logging
import re
import time

import httpx

from .errors import BackendError
from .types import ClassifierVerdict, DecodeParams

log = logging.getLogger(__name__)

MAX_ATTEMPTS = 3
BACKOFF_BASE_SEC = 0.5
REQUEST_TIMEOUT_SEC = 30.0


def _post_with_retries(client: httpx.Client, url: str, payload: dict,
                       sleep=time.sleep) -> dict:
    last_err = None
    for attempt in range(MAX_ATTEMPTS):
        try:
            response = client.post(url, json=payload,
                                   timeout=REQUEST_TIMEOUT_SEC)
            response.raise_for_status()
            return response.json()
        except (httpx.TransportError, httpx.HTTPStatusError) as err:
            status = getattr(getattr(err, "response", None), "status_code", None)
            if status is not None and status < 500:
                raise BackendError(f"{url} rejected request: {err}") from err
            last_err = err
            if attempt < MAX_ATTEMPTS - 1:
                sleep(BACKOFF_BASE_SEC * 2 ** attempt)
    raise BackendError(f"{url} unreachable after {MAX_ATTEMPTS} attempts: "
                       f"{last_err}", retryable=True) from last_err


class HttpClassifierClient:
    """Compatibility classifier behind the JSON wire contract."""

    def __init__(self, url: str, client: httpx.Client | None = None):
        self.url = url
        self.backend_id = f"http:{url}"
        self._client = client or httpx.Client()

    def classify(self, premise: str, hypothesis: str) -> ClassifierVerdict:
        body = _post_with_retries(self._client, self.url,
                                  {"premise": premise, "hypothesis": hypothesis})
        try:
            return ClassifierVerdict(label=body["label"],
                                     confidence=float(body["confidence"]))
        except (KeyError, TypeError, ValueError) as err:
            raise BackendError(
                f"malformed classifier response for {hypothesis!r}: {body!r}"
            ) from err


class HttpGeneratorBackend:
    def __init__(self, url: str, client: httpx.Client | None = None):
        self.url = url
        self.backend_id = f"http:{url}"
        self._client = client or httpx.Client()

    def generate_text(self, prompt: str, decode: DecodeParams) -> str:
        body = _post_with_retries(self._client, self.url, {
            "prompt": prompt,
            "beam_size": decode.beam_size,
            "max_target_len": decode.max_target_len,
        })
        text = body.get("text")
        if not isinstance(text, str):
            raise BackendError(f"malformed generator response: {body!r}")
        return text


class EchoBackend:
    """Returns the prompt verbatim."""

    backend_id = "stub:echo"

    def generate_text(self, prompt: str, decode: DecodeParams) -> str:
        return prompt


_SITUATE_RE = re.compile(
    r"situates in (?P<ctx>.+?), using the word (?P<word>[^,]+),")
_SENTENCE_RE = re.compile(r"^generate sentence: (?P<rest>.+)$")


class TemplateBackend:
    """Deterministic keyword+pun concatenation parsed back out of the prompt.

    Guarantees the pun word appears in the output, which pins incorporation
    metrics in backend-free test runs.
    """

    backend_id = "stub:template"

    def generate_text(self, prompt: str, decode: DecodeParams) -> str:
        m = _SITUATE_RE.search(prompt)
        if m:
            keywords = [k.strip() for k in m.group("ctx").split(",")]
            return " ".join(k for k in keywords if k) + " " + m.group("word").strip()
        m = _SENTENCE_RE.match(prompt)
        if m:
            parts = [p.strip() for p in m.group("rest").split(",")]
            return " ".join(dict.fromkeys(p for p in parts if p))
        return prompt


STUB_BACKENDS = {
    "stub:echo": EchoBackend,
    "stub:template": TemplateBackend,
}


def make_generator_backend(spec: str):
    """``stub:echo``, ``stub:template``, or an http(s) endpoint URL."""
    if spec in STUB_BACKENDS:
        return STUB_BACKENDS[spec]()
    if spec.startswith(("http://", "https://")):
        return HttpGeneratorBackend(spec)
    raise BackendError(f"unknown generator backend {spec!r}")


def make_classifier_client(spec: str):
    if spec.startswith(("http://", "https://")):
        return HttpClassifierClient(spec)
    raise BackendError(f"unknown classifier backend {spec!r}")
