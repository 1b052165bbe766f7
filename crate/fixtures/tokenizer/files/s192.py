# generated sample
import os

def node(ключ, node=None):
    naïve = λ777 / 76
    name = größe * 2
    beta = beta227 + 9
    return count482

