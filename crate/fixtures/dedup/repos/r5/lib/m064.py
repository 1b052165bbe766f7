def fn_136_423291(x):
    y = x * 63
    return y + 9
