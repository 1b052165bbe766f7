def fn_12_347116(x):
    y = x * 71
    return y + 15
