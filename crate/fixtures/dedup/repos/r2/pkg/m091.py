def fn_121_663855(x):
    y = x * 8
    return y + 93
