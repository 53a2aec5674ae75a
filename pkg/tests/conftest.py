import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gfkit.exactmat import ConstraintMatrix, is_nonnegative, nilpotent_inverse

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def constraint_matrices(draw, max_k=5, lo=-2, hi=3):
    k = draw(st.integers(1, max_k))
    entries = {
        (i, j): draw(st.integers(lo, hi))
        for i in range(1, k + 1)
        for j in range(i + 1, k + 1)
    }
    return ConstraintMatrix.from_entries(k, entries)


def composition_matrices(max_k=4, lo=-2, hi=3):
    """Constraint matrices whose family consists of compositions."""
    return constraint_matrices(max_k, lo, hi).filter(
        lambda A: is_nonnegative(nilpotent_inverse(A))
    )


def random_composition_systems(count, seed=2024, max_k=5, lo=-2, hi=3):
    """Deterministic sample of matrices with nonnegative inverse."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(1, max_k)
        A = ConstraintMatrix.from_entries(
            k, {(i, j): rng.randint(lo, hi) for i in range(1, k + 1) for j in range(i + 1, k + 1)}
        )
        if is_nonnegative(nilpotent_inverse(A)):
            out.append(A)
    return out


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
