def fn_109_60934(x):
    y = x * 36
    return y + 8
