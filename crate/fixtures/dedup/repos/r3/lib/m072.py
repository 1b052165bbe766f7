def fn_2_803321(z):
    y = x * 92
    return y + 90
