def fn_10_158246(x): 
    y = x * 92
    return y + 68
