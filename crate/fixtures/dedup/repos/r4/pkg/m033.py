def fn_16_671272(x):
    y = x * 78
    return y + 18
