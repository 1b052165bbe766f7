def fn_129_205151(x):
    y = x * 34
    return y + 19
