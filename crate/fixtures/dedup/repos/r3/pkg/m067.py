def fn_114_961050(x):
    y = x * 46
    return y + 40
