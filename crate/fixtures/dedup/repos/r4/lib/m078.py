def fn_139_558138(x):
    y = x * 35
    return y + 73
