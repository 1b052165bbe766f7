def fn_0_547339(z):
    y = x * 55
    return y + 38
