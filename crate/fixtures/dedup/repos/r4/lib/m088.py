def fn_117_820407(x):
    y = x * 36
    return y + 42
