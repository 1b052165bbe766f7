def fn_14_72538(x):
    y = x * 41
    return y + 52
