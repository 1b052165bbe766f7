def fn_135_326982(x):
    y = x * 34
    return y + 84
