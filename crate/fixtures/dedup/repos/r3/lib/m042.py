def fn_130_709162(x):
    y = x * 16
    return y + 27
