import random

from hypothesis import strategies as st

from qpoisson.algebra import validate_skew

EX2 = validate_skew([[0, 1], [-1, 0]])


def random_skew(rng, n, lo=-3, hi=3):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a[i][j] = rng.randint(lo, hi)
            a[j][i] = -a[i][j]
    return validate_skew(a)


def sample_matrices(count=21, seed=20240611):
    """Seeded sample cycling through n = 2, 3, 4."""
    rng = random.Random(seed)
    return [random_skew(rng, 2 + i % 3) for i in range(count)]


@st.composite
def skew_matrices(draw, min_n=1, max_n=4, lo=-3, hi=3):
    n = draw(st.integers(min_n, max_n))
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a[i][j] = draw(st.integers(lo, hi))
            a[j][i] = -a[i][j]
    return validate_skew(a)
