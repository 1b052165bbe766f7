class Queue:
    """FIFO queue backed by two stacks."""

    def __init__(self):
        self._in = []
        self._out = []

    def push(self, item):
        self._in.append(item)

    def pop(self):
        if not self._out:
            while self._in:
                self._out.append(self._in.pop())
        if not self._out:
            raise IndexError("pop from empty queue")
        return self._out.pop()

    def __len__(self):
        return len(self._in) + len(self._out)
