"""
Run the seeded verification battery and inspect the report
==========================================================

The battery samples random angle triples, runs the construction on
each, and checks every advertised property: fifteen named angle
identities, isosceles auxiliary arcs, tripled outer angles, roundtrip
through the independent trisection oracle, similarity invariance, and
the small-angle limit.  Everything is seeded, so the JSON report is
byte-identical run after run.
"""

from morley import run_battery, summary_document

# 1. Run 100 samples with the default seed.  Each sample contributes 24
#    named checks; ten limit checks are appended at the end.
summary = run_battery(samples=100, seed=42)
print(f"checks run: {len(summary.checks)}")
print(f"all pass:   {summary.all_pass}")

# 2. The sharpest margins: the ten checks with the largest absolute error.
ranked = sorted(summary.checks, key=lambda r: r.abs_error, reverse=True)
print("largest errors:")
for entry in ranked[:10]:
    print(f"  {entry.abs_error:.3e}  (tol {entry.tol:g})  {entry.name}")

# 3. Persist the full report.
with open("battery.json", "w", encoding="utf-8") as handle:
    handle.write(summary_document(summary))
print("wrote battery.json")
