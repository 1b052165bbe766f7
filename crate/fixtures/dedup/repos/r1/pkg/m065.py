def fn_138_667421(x):
    y = x * 32
    return y + 28
