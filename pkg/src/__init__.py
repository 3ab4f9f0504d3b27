"""
q-special functions and a numerical toolkit for nonsymmetric Askey-Wilson
Poisson kernels
"""

__version__ = "1.0.0"
