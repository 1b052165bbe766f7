import asyncio
import unittest


async def fetch(value):
    await asyncio.sleep(0)
    return value


class AsyncTests(unittest.IsolatedAsyncioTestCase):
    async def asyncSetUp(self):
        self.base = 40

    async def test_fetch(self):
        got = await fetch(2)
        self.assertEqual(self.base + got, 42)

    async def test_gather(self):
        results = await asyncio.gather(fetch(1), fetch(2))
        self.assertEqual(results, [1, 2])
