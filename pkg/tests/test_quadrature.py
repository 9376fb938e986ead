import math

import numpy as np
import pytest

from fastboys import REGION, DomainError, build_gauss_legendre
from fastboys.constants import build_rules


def test_one_point_rule_is_midpoint():
    rule = build_gauss_legendre(1)
    assert tuple(rule.nodes) == (0.0,)
    assert tuple(rule.weights) == (2.0,)


def test_two_point_rule():
    rule = build_gauss_legendre(2)
    s = 1 / math.sqrt(3)
    assert np.allclose(rule.nodes, [-s, s], atol=4e-16, rtol=0)
    assert np.allclose(rule.weights, [1.0, 1.0], atol=4e-16, rtol=0)


def test_weight_sum_equals_interval_length():
    t_max = math.exp(1.75)
    rule = build_gauss_legendre(16, 0.0, t_max)
    assert abs(math.fsum(rule.weights) - t_max) <= 1e-14
    assert rule.interval == (0.0, t_max)


@pytest.mark.parametrize("M", [1, 2, 5, 16, 22, 40, 64])
def test_monomial_exactness(M):
    a, b = 0.0, 2.5
    rule = build_gauss_legendre(M, a, b)
    for k in range(2 * M):
        exact = (b ** (k + 1) - a ** (k + 1)) / (k + 1)
        got = rule.integrate(lambda t: t ** k)
        assert abs(got - exact) <= 1e-13 * exact


@pytest.mark.parametrize("M", [3, 16, 22])
def test_nodes_ascending_inside_interval(M):
    rule = build_gauss_legendre(M, -0.5, 3.0)
    nodes, weights = np.asarray(rule.nodes), np.asarray(rule.weights)
    assert np.all(np.diff(nodes) > 0)
    assert nodes[0] > -0.5 and nodes[-1] < 3.0
    assert np.all(weights > 0)
    assert len(rule) == M


def test_nodes_symmetric():
    nodes = np.asarray(build_gauss_legendre(17).nodes)
    assert np.allclose(nodes, -nodes[::-1], atol=1e-16, rtol=0)
    assert nodes[8] == 0.0


@pytest.mark.parametrize("args", [(0,), (-3,), (4, 1.0, 1.0), (4, 2.0, 1.0)])
def test_bad_arguments(args):
    with pytest.raises(DomainError):
        build_gauss_legendre(*args)


def test_shipped_rule_integrates_gaussian():
    # half sqrt(pi) erf(t_max); erf is correctly rounded to well below 1e-16 here
    rule, shifted = build_rules()
    for r, t in ((rule, REGION.t_max), (shifted, REGION.t_max1)):
        exact = 0.5 * math.sqrt(math.pi) * math.erf(t)
        assert abs(r.integrate(lambda s: np.exp(-s * s)) - exact) <= 2e-15


def test_sixteen_points_are_too_few_for_gaussian():
    # the reason the shipped rule uses more nodes
    rule = build_gauss_legendre(16, 0.0, REGION.t_max)
    exact = 0.5 * math.sqrt(math.pi) * math.erf(REGION.t_max)
    assert abs(rule.integrate(lambda s: np.exp(-s * s)) - exact) > 1e-12
