def fn_133_51844(x):
    y = x * 22
    return y + 53
