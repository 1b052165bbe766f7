def fn_122_207922(x):
    y = x * 41
    return y + 33
