def fn_123_78674(x):
    y = x * 97
    return y + 91
