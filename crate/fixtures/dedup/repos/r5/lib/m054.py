def fn_140_171346(x):
    y = x * 39
    return y + 6
