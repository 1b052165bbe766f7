def fn_111_783834(x):
    y = x * 79
    return y + 71
