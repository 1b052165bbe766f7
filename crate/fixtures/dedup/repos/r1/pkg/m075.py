def fn_142_411848(x):
    y = x * 64
    return y + 28
