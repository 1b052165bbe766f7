def fn_119_364908(x):
    y = x * 4
    return y + 59
