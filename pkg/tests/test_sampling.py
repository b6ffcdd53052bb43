import unittest
import numpy as np

from parts import sampling
from parts.sampling import Candidate, ZoneState
from utils.errors import InvalidArgumentError


class TestBandit(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(0)
        self.zones = sampling.make_zones(4, 5, (0.0, 1.0))

    def test_make_zones(self):
        self.assertEqual(self.zones.zone_edges, (0.0, 0.25, 0.5, 0.75, 1.0))
        self.assertEqual(self.zones.rewards, (5, 5, 5, 5))

    def test_points_stay_in_zone(self):
        candidates = sampling.sample_bandit(self.zones, 3, self.rng)
        self.assertEqual(len(candidates), 20)
        for zone in range(4):
            self.assertEqual(sum(c.zone == zone for c in candidates), 5)
        for candidate in candidates:
            low, high = self.zones.interval(candidate.zone)
            self.assertTrue(np.all(candidate.point >= low) and np.all(candidate.point <= high))
            self.assertIsNotNone(candidate.zone)

    def test_single_zone_attribution(self):
        zones = sampling.make_zones(10, 3, (0.0, 1.0))
        for candidate in sampling.sample_bandit(zones, 5, self.rng):
            owners = [z for z in range(10)
                      if np.all(candidate.point >= zones.interval(z)[0]) and np.all(candidate.point < zones.interval(z)[1])]
            self.assertEqual(owners, [candidate.zone])

    def test_all_rewards_in_one_zone(self):
        zones = ZoneState(2, (0.0, 0.5, 1.0), (0, 10))
        candidates = sampling.sample_bandit(zones, 2, self.rng)
        self.assertEqual(len(candidates), 10)
        self.assertTrue(all(c.zone == 1 for c in candidates))

    def test_deterministic(self):
        a = sampling.sample_bandit(self.zones, 4, np.random.default_rng(7))
        b = sampling.sample_bandit(self.zones, 4, np.random.default_rng(7))
        for x, y in zip(a, b):
            self.assertTrue(np.array_equal(x.point, y.point))

    def test_invalid_d(self):
        with self.assertRaises(InvalidArgumentError):
            sampling.sample_bandit(self.zones, 0, self.rng)


class TestRewards(unittest.TestCase):
    def test_example(self):
        zones = ZoneState(3, (0.0, 1 / 3, 2 / 3, 1.0), (5, 5, 5))
        self.assertEqual(sampling.update_rewards(zones, 0, 2).rewards, (6, 5, 4))

    def test_same_zone(self):
        zones = ZoneState(3, (0.0, 1 / 3, 2 / 3, 1.0), (5, 5, 5))
        self.assertEqual(sampling.update_rewards(zones, 1, 1).rewards, (5, 5, 5))

    def test_empty_worst_zone(self):
        zones = ZoneState(2, (0.0, 0.5, 1.0), (10, 0))
        self.assertEqual(sampling.update_rewards(zones, 0, 1).rewards, (10, 0))

    def test_invalid_index(self):
        zones = sampling.make_zones(3, 2)
        with self.assertRaises(InvalidArgumentError):
            sampling.update_rewards(zones, 0, 3)

    def test_conservation(self):
        rng = np.random.default_rng(1)
        zones = sampling.make_zones(10, 5)
        for _ in range(10000):
            best, worst = rng.integers(0, 10, size=2)
            zones = sampling.update_rewards(zones, int(best), int(worst))
            self.assertEqual(sum(zones.rewards), 50)
            self.assertTrue(min(zones.rewards) >= 0)


class TestRandomSearch(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(2)

    def test_in_bounds(self):
        state = sampling.RandomSearchState(0.2, 0.3, n_random=100)
        candidates = sampling.sample_random(state, 6, self.rng)
        self.assertEqual(len(candidates), 100)
        for candidate in candidates:
            self.assertTrue(np.all(candidate.point >= 0.2) and np.all(candidate.point <= 0.3))
            self.assertIsNone(candidate.zone)

    def test_tiny_interval(self):
        state = sampling.RandomSearchState(0.5, 0.5 + 1e-12, n_random=50)
        for candidate in sampling.sample_random(state, 3, self.rng):
            self.assertTrue(np.all(candidate.point >= 0.5) and np.all(candidate.point <= 0.5 + 1e-12))

    def test_no_candidates(self):
        state = sampling.make_random_search(n_random=0)
        self.assertEqual(sampling.sample_random(state, 4, self.rng), [])

    def test_invalid_state(self):
        with self.assertRaises(InvalidArgumentError):
            sampling.RandomSearchState(0.6, 0.4)


class TestSelection(unittest.TestCase):
    def test_extremes(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            values = rng.normal(size=int(rng.integers(1, 30)))
            candidates = [Candidate(np.zeros(2), acq_value=v) for v in values]
            best, worst = sampling.extremes(candidates)
            self.assertTrue(all(values[best] <= v for v in values))
            self.assertTrue(all(values[worst] >= v for v in values))

    def test_bandit_wins(self):
        point, bandit_won = sampling.select_winner(('m', 0.1), ('r', 0.2))
        self.assertEqual((point, bandit_won), ('m', True))

    def test_random_wins(self):
        self.assertEqual(sampling.select_winner(('m', 0.3), ('r', 0.2)), ('r', False))

    def test_tie_goes_to_random(self):
        self.assertEqual(sampling.select_winner(('m', 0.2), ('r', 0.2)), ('r', False))

    def test_missing_side(self):
        self.assertEqual(sampling.select_winner(None, ('r', 5.0)), ('r', False))
        self.assertEqual(sampling.select_winner(('m', 5.0), None), ('m', True))


class TestShrink(unittest.TestCase):
    def test_bandit_won(self):
        state = sampling.make_random_search(shrink_lower=0.05, shrink_upper=0.05)
        shrunk = sampling.shrink_bounds(state, True)
        self.assertAlmostEqual(shrunk.lower, 0.05, places=15)
        self.assertAlmostEqual(shrunk.upper, 0.95, places=15)

    def test_random_won(self):
        state = sampling.make_random_search(shrink_lower=0.05, shrink_upper=0.05)
        self.assertIs(sampling.shrink_bounds(state, False), state)

    def test_would_cross(self):
        state = sampling.RandomSearchState(0.48, 0.52, shrink_lower=0.05, shrink_upper=0.05)
        shrunk = sampling.shrink_bounds(state, True)
        self.assertEqual((shrunk.lower, shrunk.upper), (0.48, 0.52))

    def test_adaptive(self):
        state = sampling.make_random_search(shrink_lower=0.05, shrink_upper=0.05, adaptive=True)
        shrunk = sampling.shrink_bounds(state, True, np.array([0.1, 0.1]))
        self.assertEqual(shrunk.lower, 0.0)
        self.assertAlmostEqual(shrunk.upper, 0.95, places=15)
        shrunk = sampling.shrink_bounds(state, True, np.array([0.9, 0.8]))
        self.assertAlmostEqual(shrunk.lower, 0.05, places=15)
        self.assertEqual(shrunk.upper, 1.0)

    def test_ordering_holds(self):
        rng = np.random.default_rng(4)
        state = sampling.make_random_search(shrink_lower=0.003, shrink_upper=0.002)
        for _ in range(10000):
            state = sampling.shrink_bounds(state, bool(rng.integers(0, 2)))
            self.assertTrue(0.0 <= state.lower < state.upper <= 1.0)
