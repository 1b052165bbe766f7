def fn_107_122777(x):
    y = x * 73
    return y + 27
