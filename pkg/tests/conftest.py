import os
import sys

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def action(order, r=0, singular=(), alpha=None, beta=None):
    """Action JSON object in the stable field layout."""
    return {"order": order, "quotient_genus": r,
            "singular": [{"index": k, "image": c} for k, c in singular],
            "alpha": list(alpha if alpha is not None else [0] * r),
            "beta": list(beta if beta is not None else [0] * r)}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for key in sorted(results):
            terminalreporter.write_line(results[key])
