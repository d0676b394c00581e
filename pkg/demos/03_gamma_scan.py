"""Gamma vectors and a rational-point shape scan.

A palindromic polynomial at ambient degree d expands uniquely in the
basis t**i (1+t)**(d-2i).  Nonnegative expansion coefficients force a
unimodal coefficient list, which is why the scan below tracks them.

The scan specializes the three-variable refinement (t for excedances,
p for descents, q for the major-index gap) at rational points p > 1,
q >= 1 and reports the gamma vectors of both palindromic halves plus
shape flags for the recombined row.

Run:  python3 demos/03_gamma_scan.py
"""

from fractions import Fraction

from eulerlab import conjecture_scan, gamma_expand_coeffs, shape_checks

print("gamma vectors of a few palindromic rows:")
for row in ([1, 1], [1, 7, 1], [1, 87, 301, 87, 1], [2, 1, 2]):
    flags = shape_checks(row)
    gam = "non-palindromic"
    if flags.palindromic:
        gam = "(" + ", ".join(str(g) for g in gamma_expand_coeffs(row)) + ")"
    print(f"  {row}: gamma={gam} unimodal={flags.unimodal} "
          f"alternating={flags.alternatingly_increasing}")

print()
print("scan over a small rational grid (n up to 7):")
header = f"{'n':>2} {'p':>4} {'q':>3}  gamma_a nonneg / gamma_b nonneg / alternating"
print(header)
bad = 0
for p in (Fraction(3, 2), Fraction(2), Fraction(3)):
    for q in (Fraction(1), Fraction(2), Fraction(3)):
        for n in range(1, 8):
            rep = conjecture_scan(n, p, q)
            flags = (rep.gamma_a_nonneg, rep.gamma_b_nonneg,
                     rep.alternatingly_increasing)
            if not all(flags):
                bad += 1
            print(f"{n:>2} {str(p):>4} {str(q):>3}  "
                  f"{flags[0]} / {flags[1]} / {flags[2]}")
print()
print(f"violations found: {bad}")
