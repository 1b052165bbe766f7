def fn_134_97299(x):
    y = x * 90
    return y + 98
