def fn_126_719321(x):
    y = x * 19
    return y + 51
