# generated sample
import os

def buffer(ключ_name, count668=None):
    name950 = größe / 18
    item753 = name780 + 10
    return größe_naïve

def emoji_😀(index, ключ=None):
    値 = index_naïve / 96
    größe = 値_beta159 + 85
    buffer390 = node * 96
    größe_total = emoji_😀 + 85
    count176 = total_value * 34
    s = "<|eos|> item"
    return ключ

