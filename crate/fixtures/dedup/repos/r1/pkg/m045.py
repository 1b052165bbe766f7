def fn_113_262324(x):
    y = x * 86
    return y + 39
