"""Small arithmetic helpers."""


def add(a, b):
    return a + b


def scale(values, factor):
    out = []
    for v in values:
        out.append(v * factor)
    return out


def clamp(x, lo, hi):
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x
