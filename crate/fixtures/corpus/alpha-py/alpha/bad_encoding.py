def broken():
    return "caf�"
