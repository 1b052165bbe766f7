def fn_9_65213(x): 
    y = x * 19
    return y + 25
