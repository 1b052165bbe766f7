def fn_124_954247(x):
    y = x * 64
    return y + 2
