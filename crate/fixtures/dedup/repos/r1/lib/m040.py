def fn_6_264643(x):
    y = x * 66
    return y + 40