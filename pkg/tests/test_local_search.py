import unittest
import numpy as np

from parts.local_search import AdamConfig, adam_search, fd_gradient
from utils.errors import EvaluationError, InvalidArgumentError


def quadratic(x):
    return float(np.sum((x - 0.5) ** 2))


class TestFiniteDifferences(unittest.TestCase):
    def test_squares(self):
        gradient = fd_gradient(lambda x: float(np.sum(x ** 2)), np.array([1.0, 2.0]), 1e-5)
        np.testing.assert_allclose(gradient, [2.0, 4.0], rtol=0, atol=1e-6)

    def test_constant(self):
        np.testing.assert_array_equal(fd_gradient(lambda x: 3.0, np.array([0.2, 0.4, 0.6]), 1e-3), 0.0)

    def test_smooth_function(self):
        def f(x):
            return np.sin(x[0]) + x[0] * x[1] ** 2 + np.exp(x[1])

        x = np.array([0.3, 0.7])
        expected = [np.cos(0.3) + 0.49, 2 * 0.3 * 0.7 + np.exp(0.7)]
        np.testing.assert_allclose(fd_gradient(f, x, 1e-5), expected, rtol=0, atol=1e-4)

    def test_stays_in_bounds(self):
        visited = []

        def f(x):
            visited.append(x.copy())
            return float(np.sum((x - 1.0) ** 2))

        gradient = fd_gradient(f, np.array([0.0, 0.5]), 1e-4, bounds=(0.0, 1.0))
        self.assertTrue(all(np.all(x >= 0.0) for x in visited))
        self.assertAlmostEqual(gradient[0], -2.0, delta=1e-3)
        self.assertAlmostEqual(gradient[1], -1.0, delta=1e-6)


class TestAdam(unittest.TestCase):
    def test_zero_gradient(self):
        start = np.array([0.3, 0.8])
        np.testing.assert_array_equal(adam_search(lambda x: 1.0, start, AdamConfig(steps=20)), start)

    def test_recurrence(self):
        config = AdamConfig(steps=200, learning_rate=0.05)
        iterates = []
        adam_search(quadratic, np.zeros(2), config, gradient=lambda x: 2 * (x - 0.5),
                    callback=lambda t, x, value: iterates.append(x.copy()))

        x, m, v = np.zeros(2), np.zeros(2), np.zeros(2)
        for t in range(1, 201):
            g = 2 * (x - 0.5)
            m = 0.9 * m + 0.1 * g
            v = 0.999 * v + 0.001 * g * g
            step = 0.05 * (m / (1 - 0.9 ** t)) / (np.sqrt(v / (1 - 0.999 ** t)) + 1e-8)
            x = np.clip(x - step, 0.0, 1.0)
            np.testing.assert_allclose(iterates[t - 1], x, rtol=0, atol=1e-10)

    def test_converges(self):
        best = adam_search(quadratic, np.array([0.0, 1.0, 0.2]), AdamConfig(steps=300, learning_rate=0.05))
        np.testing.assert_allclose(best, 0.5, rtol=0, atol=2e-2)

    def test_projection(self):
        visited = []

        def f(x):
            visited.append(x.copy())
            return float(np.sum((x + 1.0) ** 2))

        best = adam_search(f, np.array([0.5, 0.5]), AdamConfig(steps=50, learning_rate=0.1))
        self.assertTrue(all(np.all((x >= 0.0) & (x <= 1.0)) for x in visited))
        np.testing.assert_allclose(best, 0.0, rtol=0, atol=1e-6)

    def test_never_worse_than_start(self):
        def rough(x):
            return float(np.sum(np.abs(np.sin(25 * x))))

        rng = np.random.default_rng(0)
        for _ in range(10):
            start = rng.uniform(size=4)
            best = adam_search(rough, start, AdamConfig(steps=30, learning_rate=0.2))
            self.assertLessEqual(rough(best), rough(start))

    def test_non_finite(self):
        with self.assertRaises(EvaluationError):
            adam_search(lambda x: float('nan'), np.zeros(2), AdamConfig(steps=3))

    def test_invalid_config(self):
        with self.assertRaises(InvalidArgumentError):
            AdamConfig(beta1=1.0)
        with self.assertRaises(InvalidArgumentError):
            AdamConfig(learning_rate=0.0)
