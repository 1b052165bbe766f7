def fn_102_453804(x):
    y = x * 49
    return y + 73
