import functools
import unittest
from unittest import mock


def retry(times):
    def wrap(fn):
        @functools.wraps(fn)
        def inner(*a, **k):
            for _ in range(times - 1):
                try:
                    return fn(*a, **k)
                except AssertionError:
                    pass
            return fn(*a, **k)
        return inner
    return wrap


class ClockTest(unittest.TestCase):
    @mock.patch("time.time", return_value=10.0)
    def test_patched_time(self, fake):
        import time
        self.assertEqual(time.time(), 10.0)

    @retry(3)
    @unittest.skipIf(False, "never skipped")
    def test_retried(self):
        self.assertEqual(1 + 1, 2)

    @staticmethod
    def make():
        return object()

    @classmethod
    def setUpClass(cls):
        cls.shared = []
