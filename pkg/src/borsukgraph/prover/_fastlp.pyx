# cython: language_level=3
# Compiled feasibility kernel; the pure Python twin lives in exactlp.py.


def kernel_version():
    return 0
