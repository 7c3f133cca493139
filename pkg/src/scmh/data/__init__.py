"""Data package for scmh - contains the worked cases."""
