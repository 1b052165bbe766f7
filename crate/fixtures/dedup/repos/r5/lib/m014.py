def fn_2_803321(x):
    y = x * 92
    return y + 90
