"""Exact analyzer for finite labelled graphs."""

import json

from ._core import Algebra, Graph, LgsError, LinComb, replay
from ._core import analyze_json as _analyze_json
from ._core import check_json as _check_json
from ._core import oracle

__all__ = ["Algebra", "Graph", "LgsError", "LinComb", "analyze", "check", "load", "oracle", "replay"]


def load(path):
    with open(path, encoding="utf-8") as f:
        return Graph.parse(f.read())


def analyze(graph, **caps):
    return json.loads(_analyze_json(graph, **caps))


def check(graph, prop):
    return json.loads(_check_json(graph, prop))
