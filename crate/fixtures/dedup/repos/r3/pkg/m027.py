def fn_15_85840(x):
    y = x * 66
    return y + 60
