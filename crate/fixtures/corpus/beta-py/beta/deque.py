class Deque:
    def __init__(self):
        self._items = []

    def push_front(self, item):
        self._items.insert(0, item)

    def push_back(self, item):
        self._items.append(item)

    def pop_front(self):
        return self._items.pop(0)

    def pop_back(self):
        return self._items.pop()

    def __len__(self):
        return len(self._items)
