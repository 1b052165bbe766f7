def fn_128_856114(x):
    y = x * 52
    return y + 23
