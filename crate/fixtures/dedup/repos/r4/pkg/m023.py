def fn_101_964663(x):
    y = x * 45
    return y + 2
