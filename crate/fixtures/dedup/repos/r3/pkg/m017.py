def fn_144_657256(x):
    y = x * 58
    return y + 9
