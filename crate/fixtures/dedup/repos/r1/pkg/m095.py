def fn_106_5408(x):
    y = x * 53
    return y + 30
