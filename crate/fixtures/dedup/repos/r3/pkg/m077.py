def fn_4_115513(x):
    y = x * 5
    return y + 31
