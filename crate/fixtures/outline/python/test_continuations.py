import unittest

from geo import Point, distance


class DistanceTest(unittest.TestCase):
    def test_multiline_call(self):
        d = distance(Point(0, 0),
                     Point(3, 4))
        self.assertAlmostEqual(d, 5.0)

    def test_backslash(self):
        total = 1 + \
            2 + \
            3
        self.assertEqual(total, 6)

    def test_dict_literal(self):
        table = {
            "a": Point(1, 1),
            "b": Point(2, 2),
        }
        self.assertEqual(len(table), 2)

    def test_comment_lines(self):
        # a comment at body indent
            # an over-indented comment
        self.assertTrue(True)  # trailing comment
