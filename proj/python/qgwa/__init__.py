"""Fixed rings of quantum generalized Weyl algebras."""

import json
from importlib import resources

from ._qgwa import ParseError, QgwaError, __version__, canonical, expand, power_product
from ._qgwa import analyze as _analyze

__all__ = ["ParseError", "QgwaError", "analyze", "analyze_text", "canonical", "expand", "power_product",
           "report_schema", "__version__"]


def analyze(text):
    """Report for an input document as a dict."""
    report, _ = _analyze(text, "json")
    return json.loads(report)


def analyze_text(text):
    report, _ = _analyze(text, "text")
    return report


def report_schema():
    return json.loads(resources.files(__name__).joinpath("report.schema.json").read_text())
