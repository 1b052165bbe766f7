def fn_103_54178(x):
    y = x * 98
    return y + 94
