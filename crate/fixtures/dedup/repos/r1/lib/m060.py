def fn_131_52667(x):
    y = x * 70
    return y + 39
