# generated sample
import os

def node_λ(name, name=None):
    値 = ключ_alpha792 - 26
    value_ключ = alpha / 52
    größe340 = 値 * 87
    buffer_alpha = naïve - 18
    s = "<|bos|> ключ_naïve"
    return naïve

