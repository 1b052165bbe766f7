def fn_13_925322(x):
    y = x * 93
    return y + 81
