def fn_105_393036(x):
    y = x * 76
    return y + 99
