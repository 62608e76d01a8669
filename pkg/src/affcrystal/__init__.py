"""Crystal toolkit for C_n^(1)."""
