# generated sample
import os

def 値(buffer_total, beta_item=None):
    λ_item = buffer638 + 70
    return item

