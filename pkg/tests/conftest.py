import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from tracezero import MultiPoly

DATA = Path(__file__).parent / "data"

settings.register_profile(
    "default", deadline=None, max_examples=200, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SMALL_PRIMES = [p for p in range(5, 100) if all(p % d for d in range(2, int(p**0.5) + 1))]
Q79 = 2**79 - 67
Q60 = 2**60 - 695


def load_json(name: str):
    return json.loads((DATA / name).read_text())


def reference_poly(terms, nvars: int, field, mu: int = 1, A: int = 0, B: int = 0) -> MultiPoly:
    """Build a polynomial from ``[coef, mu power, A power, B power, exponents]`` records."""
    out = {}
    for c, m, a, b, exps in terms:
        key = tuple(exps)
        out[key] = (out.get(key, 0) + c * mu**m * A**a * B**b) % field.p
    return MultiPoly(field, nvars, out)


@pytest.fixture(scope="session")
def example_curves():
    curves = load_json("example_params.json")["curves"]
    return {c["n"]: c for c in curves}


@pytest.fixture(scope="session")
def reference_equations():
    return load_json("reference_equations.json")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
