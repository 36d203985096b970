"""Super Jack polynomials, super hypergeometric series and β-ensemble checks."""

__version__ = "0.1.0"
