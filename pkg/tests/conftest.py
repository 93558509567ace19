import json
import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from proofnet.brauer import Endpoint, SplitEquivalence
from proofnet.formula import Atom, Binary, Formula, Neg

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

GOLDEN_DIR = Path(__file__).parent / "golden"

# filled by the acceptance tests, printed at the end of the run
CRITERIA_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


def load_json(name: str):
    return json.loads((GOLDEN_DIR / name).read_text(encoding="utf-8"))


def random_brauerian(rng: random.Random, src: int, tgt: int) -> SplitEquivalence:
    """A uniformly shuffled perfect pairing of the endpoints of ``src ⊢ tgt``."""
    ends = [Endpoint("s", k) for k in range(src)] + [Endpoint("t", k) for k in range(tgt)]
    rng.shuffle(ends)
    return SplitEquivalence.from_pairs(src, tgt, [ends[i:i + 2] for i in range(0, len(ends), 2)])


def evaluate(a: Formula, valuation: dict[str, bool]) -> bool:
    """Classical truth value; an oracle for negation normal forms."""
    if isinstance(a, Atom):
        return valuation[a.name]
    if isinstance(a, Neg):
        return not evaluate(a.body, valuation)
    assert isinstance(a, Binary)
    left, right = evaluate(a.left, valuation), evaluate(a.right, valuation)
    return left and right if a.op.value == "/\\" else left or right
