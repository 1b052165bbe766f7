def fn_3_566425(x):
    y = x * 86
    return y + 35
