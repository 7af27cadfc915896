from hypothesis import given, settings

from qpoisson.algebra import validate_skew
from qpoisson.verify import run_suite

from conftest import EX2, skew_matrices


def test_suite_passes_on_two_generators():
    results = run_suite(EX2, 5)
    assert len(results) == 23
    assert [r.name for r in results if not r.passed] == []


def test_suite_passes_on_one_generator():
    assert all(r.passed for r in run_suite(validate_skew([[0]]), 5))


@settings(max_examples=10, deadline=None)
@given(skew_matrices(max_n=3))
def test_suite_passes_on_random_matrices(A):
    failed = [f"{r.name}: {r.witness}" for r in run_suite(A, 3) if not r.passed]
    assert failed == []
