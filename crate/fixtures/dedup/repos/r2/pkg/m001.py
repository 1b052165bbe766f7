def fn_110_824673(x):
    y = x * 37
    return y + 24
