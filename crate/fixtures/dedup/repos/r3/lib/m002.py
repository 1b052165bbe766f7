def fn_104_371868(x):
    y = x * 8
    return y + 61
