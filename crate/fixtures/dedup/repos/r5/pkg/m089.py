def fn_118_10237(x):
    y = x * 8
    return y + 96
