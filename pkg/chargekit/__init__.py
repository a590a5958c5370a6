"""
ChargeKit - точная арифметика конечно-аддитивных мер (зарядов)
"""
__version__ = "1.0.0"
