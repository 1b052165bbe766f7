def fn_120_780818(x):
    y = x * 36
    return y + 60
