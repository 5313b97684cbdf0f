"""Python bindings for the dweil library."""

import json as _json

from ._dweil import DweilError, pairing, suite_names, torsion, weil_operator

__all__ = ["DweilError", "pairing", "suite_names", "torsion", "verify", "weil_operator"]


def verify(suite, seed=0, cases=0):
    """Run a verification suite and return the report as a dict."""
    from ._dweil import verify_json

    return _json.loads(verify_json(suite, seed, cases))
