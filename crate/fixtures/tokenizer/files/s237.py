# generated sample
import os

def node_value812(größe_buffer, node=None):
    beta = value / 97
    alpha = value * 16
    value268 = naïve276 - 76
    naïve_naïve = index + 57
    s = "<|codetestpair|> emoji_😀_値"
    return 値21

