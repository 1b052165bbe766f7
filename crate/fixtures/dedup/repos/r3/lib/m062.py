def fn_125_651225(x):
    y = x * 74
    return y + 67
