"""
    Light-cone support propagation and d*.

"""
import unittest

from otocsim.circuits.ensemble import GridGeometry, brickwork_layout
from otocsim.circuits.lightcone import (propagate_support, conjugated_support, commutes_by_lightcone,
                                        min_connecting_depth, support_size_by_depth, lightcone_report,
                                        corner_depth_scaling)
from otocsim.circuits.paulis import PauliString, parse_pauli_string
from otocsim.errors import SpecError


class Test_supportPropagation(unittest.TestCase):
    def setUp(self):
        self.grid = GridGeometry(3, 3)
        self.corner = PauliString.single('X', self.grid.index(3, 3))
        self.origin = PauliString.single('Z', self.grid.index(1, 1))

    def test_single_layer(self):
        layout = brickwork_layout(self.grid, 3)
        self.assertEqual(propagate_support(self.grid, layout[:1], {self.grid.index(1, 1)}),
                         frozenset({self.grid.index(1, 1), self.grid.index(1, 2)}))
        self.assertEqual(propagate_support(self.grid, layout[2:3], self.corner),
                         frozenset({self.grid.index(3, 2), self.grid.index(3, 3)}))
        self.assertEqual(propagate_support(self.grid, [], self.corner), self.corner.sites)

    def test_monotone(self):
        sizes = support_size_by_depth(self.grid, self.corner, 12)
        self.assertEqual(sizes[0], 1)
        self.assertEqual(sizes, sorted(sizes))
        self.assertEqual(sizes[-1], 9)

    def test_reverse_order(self):
        # the last layer spreads B first
        self.assertEqual(conjugated_support(self.grid, 3, self.corner),
                         frozenset(self.grid.index(3, c) for c in (1, 2, 3)))

    def test_against_coordinate_oracle(self):
        grid = GridGeometry(4, 4)
        start = grid.index(4, 4)
        layout = brickwork_layout(grid, 12)
        support = {grid.coords(start)}
        for i in range(12):
            horizontal, odd = i % 2 == 0, i % 4 >= 2
            grown = set(support)
            for r, c in support:
                lead = c if horizontal else r
                partner_offset = 1 if (lead - 1) % 2 == int(odd) else -1
                partner = (r, c + partner_offset) if horizontal else (r + partner_offset, c)
                if 1 <= partner[0] <= 4 and 1 <= partner[1] <= 4:
                    grown.add(partner)
            support = grown
            expected = frozenset(grid.index(r, c) for r, c in support)
            self.assertEqual(propagate_support(grid, layout[:i + 1], {start}), expected)

    def test_depth_zero(self):
        grid = GridGeometry(1, 2)
        self.assertTrue(commutes_by_lightcone(grid, 0, PauliString.single('X', 1), PauliString.single('Z', 0)))
        self.assertFalse(commutes_by_lightcone(grid, 0, PauliString.single('X', 0), PauliString.single('Z', 0)))
        self.assertEqual(min_connecting_depth(grid, PauliString.single('X', 1), PauliString.single('Z', 0)), 1)
        self.assertEqual(propagate_support(grid, brickwork_layout(grid, 1), {1}), frozenset({0, 1}))

    def test_errors(self):
        with self.assertRaises(SpecError):
            propagate_support(self.grid, [], set())
        with self.assertRaises(SpecError):
            propagate_support(self.grid, [], {9})


class Test_minConnectingDepth(unittest.TestCase):
    def test_corners_3x3(self):
        grid = GridGeometry(3, 3)
        b = parse_pauli_string("X:(3,3)", grid)
        m = parse_pauli_string("Z:(1,1)", grid)
        self.assertEqual(min_connecting_depth(grid, b, m), 4)
        for depth in range(4):
            self.assertTrue(commutes_by_lightcone(grid, depth, b, m))
        self.assertFalse(commutes_by_lightcone(grid, 4, b, m))
        self.assertFalse(commutes_by_lightcone(grid, 8, b, m))

    def test_shared_site(self):
        grid = GridGeometry(2, 2)
        self.assertEqual(min_connecting_depth(grid, PauliString.single('X', 0), PauliString.single('Z', 0)), 0)

    def test_neighbours(self):
        grid = GridGeometry(1, 3)
        self.assertEqual(min_connecting_depth(grid, PauliString.single('X', 1), PauliString.single('Z', 0)), 1)
        self.assertEqual(min_connecting_depth(grid, PauliString.single('X', 2), PauliString.single('Z', 1)), 3)

    def test_out_of_range(self):
        grid = GridGeometry(1, 1)
        with self.assertRaises(SpecError):
            min_connecting_depth(grid, PauliString.single('X', 0), PauliString.single('Z', 1))

    def test_report(self):
        grid = GridGeometry(3, 3)
        report = lightcone_report(grid, parse_pauli_string("X:(3,3)", grid), parse_pauli_string("Z:(1,1)", grid), 6)
        self.assertEqual(report['d_star'], 4)
        self.assertEqual(len(report['support_size_by_depth']), 7)
        self.assertEqual(report['support_size_by_depth'][4], 9)


class Test_cornerScaling(unittest.TestCase):
    def test(self):
        result = corner_depth_scaling(range(2, 9))
        self.assertEqual(result['sides'], list(range(2, 9)))
        self.assertEqual(result['d_star'][:2], [2, 4])
        self.assertEqual(result['d_star'], sorted(result['d_star']))
        self.assertGreater(result['slope'], 0)
        self.assertGreater(result['r_squared'], 0.95)
        with self.assertRaises(SpecError):
            corner_depth_scaling([3])


if __name__ == '__main__':
    unittest.main()
