def fn_100_715769(x):
    y = x * 54
    return y + 64
