def fn_5_402832(x):
    y = x * 97
    return y + 53
