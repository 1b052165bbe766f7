def fn_7_671638(x):
    y = x * 89
    return y + 92
