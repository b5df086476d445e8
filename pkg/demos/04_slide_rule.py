"""
Predicting promotion slides from arcs
=====================================

During promotion the hole left by 1 moves up or left.  An arc rule tries
to say which entry drops into each row.  As usually stated it works on
every rectangle but fails on some three-row shapes that are not
rectangles.  Adding one matching condition fixes it.
"""
from sl3webs.tableau import StandardTableau, promotion_witness
from sl3webs.verify import slide_prediction, verify_slide_lemma

t = StandardTableau(((1, 2, 5), (3, 4, 6), (7, 8)))
print("slides:", [(s.entry, s.source, s.target) for s in promotion_witness(t).vertical_slides])
print("stated rule predicts:   ", slide_prediction(t, "stated"))
print("corrected rule predicts:", slide_prediction(t, "corrected"))

for rule in ("stated", "corrected"):
    report = verify_slide_lemma(10, rule=rule)
    print(f"\n{rule} rule, up to 10 boxes: {report.instances} tableaux, {len(report.failures)} failures")
    for line in report.lines()[:3]:
        print("  ", line)

print("\nstated rule on rectangles only:", verify_slide_lemma(12, rectangular_only=True).passed)
