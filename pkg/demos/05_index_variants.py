"""
Telling index variants apart numerically
========================================

When a closed form can be written with a summation limit of a or a+1, or
with v <= r versus v <= r-1, an independent evaluation settles it. The
verify module keeps both variants and reports their offsets.
"""

from hyperstieltjes.verify import adjudicate_misprints, check_log_power_sum, run_suite

for rep in adjudicate_misprints():
    print(f"{'PASS' if rep.passed else 'FAIL'}  {rep.id:48s} lhs={float(rep.lhs.value): .12f}")

# the finite identity behind the closed route needs the full binomial
# expansion of ln^m(k - j); the single-term version only works for m = 1
for m in range(4):
    full = check_log_power_sum(30, 3, m)
    single = check_log_power_sum(30, 3, m, variant="printed")
    print(f"m={m}: full expansion diff {full.abs_diff:.1e}, single term diff {single.abs_diff:.3e}")

reports = run_suite("all")
print(f"{sum(r.passed for r in reports)}/{len(reports)} identity checks pass")
