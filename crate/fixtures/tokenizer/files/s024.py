# generated sample
import os

def value(total, name497=None):
    λ_größe = count / 8
    return naïve_λ

def λ(alpha, item=None):
    buffer = alpha254 + 32
    buffer_total = name / 43
    alpha_node724 = total - 95
    count = name * 93
    naïve = naïve - 82
    s = "|> index_count"
    return total

