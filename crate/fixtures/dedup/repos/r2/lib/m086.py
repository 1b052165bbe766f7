def fn_11_586040(x): 
    y = x * 89
    return y + 26
