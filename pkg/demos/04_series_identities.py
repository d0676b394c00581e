"""Series-side identities, checked coefficient by coefficient.

Regrouping sum_n A_n(s,t) u**n / (1-s)**(n+1) by powers of s gives one
closed rational series per exponent r.  Its u**n coefficient must match
the direct resummation sum_j [s**j] A_n * C(n+r-j, n), and the companion
series built from the palindromic a-parts telescopes against it.

Run:  python3 demos/04_series_identities.py
"""

from eulerlab import f_nkr, f_nkr_closed, foata_term, lhs_coeff, verify_foata

ORDER = 6

print(f"series vs direct extraction through order u^{ORDER}:")
for r in range(4):
    g = foata_term(r, ORDER)
    ok = all(g.coeff(n).as_upoly() == lhs_coeff(n, r)
             for n in range(ORDER + 1))
    print(f"  r={r}: {'ok' if ok else 'MISMATCH'}")

report = verify_foata(7, 7)
print(f"full check through u^7, s^7: joint={report.joint_ok} "
      f"a-part={report.a_ok} telescope={report.telescope_ok}")

print()
print("integer coefficients f(n,k,r) and the lattice closed form:")
for (n, k, r) in ((3, 1, 1), (3, 1, 2), (3, 2, 2), (5, 2, 4)):
    print(f"  f({n},{k},{r}) = {f_nkr(n, k, r)}  "
          f"closed form {f_nkr_closed(n, k, r)}")

# The closed form counts lattice points in a box whose coordinate sum
# falls in a window of r consecutive values.  The k = 0 slice is the
# closed simplex, so there the window factor has to be dropped; and
# swapping which index drives the window breaks the count outright.
print()
print("window subtleties on the boundary:")
print(f"  k=0 column: f(3,0,1) = {f_nkr(3, 0, 1)}; "
      f"a half-open window there would give 3")
print(f"  swapped-index reading at (3,1,2): "
      f"{f_nkr_closed(3, 1, 2, literal=True)} "
      f"(direct value {f_nkr(3, 1, 2)})")
