def fn_1_383384(z):
    y = x * 39
    return y + 22
