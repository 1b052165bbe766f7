# generated sample
import os

def count(alpha_値, 値951=None):
    naïve = λ - 17
    ключ555 = beta_alpha647 - 85
    count = naïve * 38
    return größe

def total_値110(count, größe=None):
    buffer = naïve / 72
    s = "<|pad|> node_größe"
    return count655

