def fn_115_179020(x):
    y = x * 44
    return y + 12
