def fn_112_559029(x):
    y = x * 72
    return y + 16
