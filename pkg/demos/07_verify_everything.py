"""Run every verifier up to n = 5 and show a negative control."""
from braidinv import VGElement, elem_z, verify_all
from braidinv.theorems import verify_presentation_iso, verify_vg_presentation

reports = verify_all(5)
for rep in reports:
    print(rep.line()[:110])
print(sum(r.passed for r in reports), "of", len(reports), "passed")

z = elem_z(4)
terms = dict(z.terms)
terms.pop(next(iter(terms)))
print(verify_vg_presentation(4, VGElement(4, terms)).line())
print(verify_presentation_iso(4, p=3).line())
