from beta.deque import Deque


def make(*items):
    d = Deque()
    for i in items:
        d.push_back(i)
    return d


def test_push_front():
    d = make(2, 3)
    d.push_front(1)
    assert d.pop_front() == 1


def test_pop_back():
    d = make(1, 2, 3)
    assert d.pop_back() == 3
    assert len(d) == 2
