import unittest


class OuterTests(unittest.TestCase):
    class Helper:
        def build(self):
            return [1, 2, 3]

        def test_looks_like_a_test(self):
            return True

    def test_helper_builds(self):
        self.assertEqual(self.Helper().build(), [1, 2, 3])

    def test_nested_function(self):
        def inner(x):
            return x * 2

        def test_inner_not_a_method():
            return 0

        self.assertEqual(inner(2), 4)


class SecondTests(unittest.TestCase):
    def test_one(self):
        self.assertTrue(True)
