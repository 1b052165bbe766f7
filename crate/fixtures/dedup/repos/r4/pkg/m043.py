def fn_8_421098(x):
    y = x * 19
    return y + 70
