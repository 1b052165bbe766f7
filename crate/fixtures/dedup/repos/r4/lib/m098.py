def fn_141_760077(x):
    y = x * 64
    return y + 75
