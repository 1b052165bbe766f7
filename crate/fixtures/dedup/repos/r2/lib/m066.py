def fn_0_547339(x):
    y = x * 55
    return y + 38
