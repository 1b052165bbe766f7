def fn_108_260644(x):
    y = x * 69
    return y + 46
