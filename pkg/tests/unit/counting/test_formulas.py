"""
Exact counting formula tests
"""

import math
from unittest.mock import patch

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cobweb_lab.counting import (
    complete_cobwebs_total,
    compositions,
    fubini,
    multinomial,
    relations_of_type,
    relations_total,
    stirling2,
    surjection_count,
    surjection_count_inclusion_exclusion,
    tuples_of_type,
)
from cobweb_lab.models.counting import CompositionType
from cobweb_lab.models.custom_errors import (
    ArgumentError,
    FeasibilityError,
    FormulaMismatchError,
)


class TestMultinomial:
    def test_small_values(self):
        assert multinomial(3, (1, 2)) == 3
        assert multinomial(5, (2, 3)) == 10
        assert multinomial(4, CompositionType.of(1, 1, 1, 1)) == 24
        assert multinomial(4, (4,)) == 1

    def test_type_must_compose_n(self):
        with pytest.raises(ArgumentError):
            multinomial(5, (2, 2))

    def test_exact_for_large_inputs(self):
        value = multinomial(60, (20, 20, 20))
        assert value == math.factorial(60) // math.factorial(20) ** 3


class TestStirlingAndSurjections:
    def test_stirling_table(self):
        assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
        assert stirling2(0, 0) == 1
        assert stirling2(3, 5) == 0

    def test_stirling_negative_raises(self):
        with pytest.raises(ArgumentError):
            stirling2(-1, 0)

    def test_surjection_values(self):
        assert surjection_count(4, 3) == 36
        assert surjection_count(3, 3) == 6
        assert surjection_count(3, 4) == 0
        assert surjection_count(5, 1) == 1

    def test_surjection_needs_positive_arguments(self):
        with pytest.raises(ArgumentError):
            surjection_count(0, 1)
        with pytest.raises(ArgumentError):
            surjection_count(3, 0)

    def test_disagreeing_formulas_raise(self):
        with patch(
            "cobweb_lab.counting.formulas.surjection_count_inclusion_exclusion",
            return_value=35,
        ):
            with pytest.raises(FormulaMismatchError):
                surjection_count(4, 3)

    def test_mismatch_is_a_domain_error(self):
        assert issubclass(FormulaMismatchError, ArithmeticError)

    @given(st.integers(1, 25), st.integers(1, 25))
    def test_two_routes_agree(self, n, k):
        assert math.factorial(k) * stirling2(n, k) == surjection_count_inclusion_exclusion(n, k)

    def test_large_values_are_exact(self):
        value = surjection_count(200, 100)
        assert value == math.factorial(100) * stirling2(200, 100)
        assert value > 2**64


class TestFubini:
    def test_first_values(self):
        assert [fubini(n) for n in range(1, 8)] == [1, 3, 13, 75, 541, 4683, 47293]

    def test_composition_route_agrees(self):
        for n in range(1, 11):
            assert complete_cobwebs_total(n) == fubini(n)

    def test_non_positive_raises(self):
        with pytest.raises(ArgumentError):
            fubini(0)

    def test_composition_sum_equals_surjections(self):
        for n in range(1, 11):
            for k in range(1, n + 1):
                summed = sum(multinomial(n, t) for t in compositions(n, k))
                assert summed == math.factorial(k) * stirling2(n, k) == surjection_count(n, k)


class TestRelations:
    def test_relations_of_type(self):
        assert tuples_of_type((2, 3)) == 6
        assert relations_of_type((2, 3)) == 63
        assert relations_of_type((1,)) == 1

    def test_relations_total_small(self):
        # <1,1,1>: 1, <1,2>: 3, <2,1>: 3, <3>: 7
        assert relations_total(3) == 14
        assert relations_total(1) == 1

    def test_relations_total_bounds(self):
        with pytest.raises(ArgumentError):
            relations_total(0)
        with pytest.raises(FeasibilityError):
            relations_total(25)

    def test_relations_total_at_limit_is_exact(self):
        value = relations_total(24)
        assert value == sum(2**t.product - 1 for t in compositions(24))
        assert value > 2**6000
