def fn_116_953198(x):
    y = x * 75
    return y + 74
