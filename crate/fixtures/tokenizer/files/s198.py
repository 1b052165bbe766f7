# generated sample
import os

def ключ(index, value_größe=None):
    value_naïve = ключ / 27
    node_node303 = beta_naïve / 43
    return 値147

