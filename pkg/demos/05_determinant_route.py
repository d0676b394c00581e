"""Recover the palindromic parts from a determinant, no enumeration.

The series coefficients f_n(t, r) satisfy a triangular recurrence whose
Cramer solution is an (n+1) x (n+1) determinant with entries that are
polynomials in t and r.  Resumming that determinant over r and stripping
a boundary term rebuilds a_n(s, t) exactly, which this script checks
against the enumeration-built value.

Run:  python3 demos/05_determinant_route.py
"""

import time

from eulerlab import (a_part, build_matrix, det_Mnr, det_bareiss,
                      det_cofactor, reconstruct_a, recurrence_f)

print("determinants (fractions everywhere, all arithmetic exact):")
for n in range(4):
    print(f"  n={n}: {det_Mnr(n).text()}")

print()
print("determinant vs the recurrence it solves:")
for n in range(7):
    same = det_Mnr(n) == recurrence_f(n)
    print(f"  n={n}: {'ok' if same else 'MISMATCH'}")

print()
print("fraction-free elimination vs cofactor expansion:")
for n in range(5):
    m = build_matrix(n)
    t0 = time.perf_counter()
    fast = det_bareiss(m)
    t1 = time.perf_counter()
    slow = det_cofactor(m)
    t2 = time.perf_counter()
    print(f"  n={n}: equal={fast == slow}  "
          f"bareiss {1000 * (t1 - t0):.1f}ms, cofactor {1000 * (t2 - t1):.1f}ms")

print()
print("rebuilding a_n from the determinant alone:")
for n in range(1, 8):
    got = reconstruct_a(n)
    want = a_part(n)
    print(f"  n={n}: {'matches enumeration' if got == want else 'MISMATCH'}")
print()
print(f"a_4 = {reconstruct_a(4).text()}")
