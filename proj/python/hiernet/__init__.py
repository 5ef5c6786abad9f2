"""Hierarchical network topologies and internally edge-disjoint S-trees.

Thin wrappers over the compiled command layer. Documents are returned as
parsed JSON; failures that the CLI reports with exit code 2 or 3 raise
``HiernetError`` carrying that code.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Optional

from . import _core

__version__ = _core.__version__
__all__ = ["HiernetError", "gen", "gen_text", "strees", "oracle", "verify", "sha256_hex"]

sha256_hex = _core.sha256_hex


class HiernetError(Exception):
    def __init__(self, exit_code: int, message: str):
        super().__init__(message)
        self.exit_code = exit_code


def _check(result: tuple[int, str, str]) -> tuple[int, str]:
    code, body, message = result
    if code in (_core.EXIT_INPUT, _core.EXIT_PRECONDITION):
        raise HiernetError(code, message)
    return code, body


def _as_text(graph: Any) -> str:
    return graph if isinstance(graph, str) else json.dumps(graph)


def gen_text(family: str, n: int = 0, format: str = "json", spec: str = "", **kwargs: Any) -> str:
    """Canonical document text exactly as the CLI writes it."""
    return _check(_core.gen(family, n, format, spec, **kwargs))[1]


def gen(family: str, n: int = 0, spec: str = "", **kwargs: Any) -> dict:
    return json.loads(gen_text(family, n, "json", spec, **kwargs))


def strees(graph: Any, targets: Iterable[Any], budget: Optional[int] = None) -> dict:
    args = [str(t) for t in targets]
    result = _core.strees(_as_text(graph), args) if budget is None else _core.strees(_as_text(graph), args, budget)
    return json.loads(_check(result)[1])


def oracle(graph: Any, mode: str, *args: Any, budget: Optional[int] = None, jobs: int = 1,
           expect: Optional[int] = None) -> dict:
    kwargs: dict[str, Any] = {"jobs": jobs, "expect": expect}
    if budget is not None:
        kwargs["budget"] = budget
    code, body = _check(_core.oracle(_as_text(graph), mode, [str(a) for a in args], **kwargs))
    doc = json.loads(body)
    doc["expectation_met"] = code == _core.EXIT_OK
    return doc


def verify(graph: Any, packing: Any) -> dict:
    return json.loads(_check(_core.verify(_as_text(graph), _as_text(packing)))[1])
