"""CK6 Lie conformal superalgebra toolkit."""
