def fn_127_508442(x):
    y = x * 95
    return y + 75
