def fn_137_568475(x):
    y = x * 12
    return y + 69
