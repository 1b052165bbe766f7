def fn_143_580894(x):
    y = x * 54
    return y + 66
