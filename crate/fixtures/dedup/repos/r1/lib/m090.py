def fn_1_383384(x):
    y = x * 39
    return y + 22
