#!/usr/bin/env python3
"""Write the first N nontrivial zeta zeros (imaginary parts) with zeta'(rho).

Usage: gen_zeros.py N DIGITS > zeros.txt
"""
import sys

from mpmath import mp, nstr, zeta, zetazero


def main():
    count = int(sys.argv[1])
    digits = int(sys.argv[2])
    mp.dps = digits + 15
    print(f"# first {count} nontrivial zeros rho = 1/2 + i t of zeta")
    print(f"# columns: t  re(zeta'(rho))  im(zeta'(rho)); {digits} significant digits")
    print("# generated with mpmath zetazero / zeta(derivative=1)")
    for n in range(1, count + 1):
        rho = zetazero(n)
        d = zeta(rho, derivative=1)
        print(nstr(rho.imag, digits, strip_zeros=False),
              nstr(d.real, digits, strip_zeros=False),
              nstr(d.imag, digits, strip_zeros=False))


if __name__ == "__main__":
    main()
