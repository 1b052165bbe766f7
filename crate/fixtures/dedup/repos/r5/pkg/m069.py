def fn_132_844036(x):
    y = x * 42
    return y + 40
