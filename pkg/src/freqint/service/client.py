"""Thin client for the analysis service.

Without a server URL the client mounts the application in process through an
ASGI transport, so the CLI works standalone while exercising the exact HTTP
surface a remote deployment exposes.
"""

from __future__ import annotations

import asyncio

import httpx

__all__ = ["ServiceClient", "ServiceError"]


class ServiceError(RuntimeError):
    """Non-success response from the service."""

    def __init__(self, status_code: int, detail: str):
        self.status_code = status_code
        self.detail = detail
        super().__init__(f"service returned {status_code}: {detail}")


class ServiceClient:
    """Issue requests against a remote server or the in-process app."""

    def __init__(self, server: str | None = None, timeout: float = 120.0):
        self._server = server.rstrip("/") if server else None
        self._timeout = timeout
        self._app = None

    def _local_app(self):
        if self._app is None:
            from .app import create_app

            self._app = create_app()
        return self._app

    def _post(self, path: str, payload: dict) -> dict:
        async def go() -> httpx.Response:
            if self._server is not None:
                async with httpx.AsyncClient(
                    base_url=self._server, timeout=self._timeout
                ) as client:
                    return await client.post(path, json=payload)
            transport = httpx.ASGITransport(app=self._local_app())
            async with httpx.AsyncClient(
                transport=transport, base_url="http://freqint.local", timeout=self._timeout
            ) as client:
                return await client.post(path, json=payload)

        response = asyncio.run(go())
        if response.status_code != 200:
            detail = response.text
            try:
                detail = response.json().get("detail", detail)
            except ValueError:
                pass
            raise ServiceError(response.status_code, f"{detail}")
        return response.json()

    def coeffs(self, payload: dict) -> dict:
        return self._post("/coeffs", payload)

    def freq_sweep(self, payload: dict) -> dict:
        return self._post("/freq-sweep", payload)

    def stability_map(self, payload: dict) -> dict:
        return self._post("/stability-map", payload)

    def transient_gains(self, payload: dict) -> dict:
        return self._post("/transient-gains", payload)

    def verify_roots(self, payload: dict) -> dict:
        return self._post("/verify-roots", payload)

    def case(self, payload: dict) -> dict:
        return self._post("/case", payload)

    def demo_transient(self, payload: dict) -> dict:
        return self._post("/demo-transient", payload)
