"""
A scale of age words
====================

A conceptual scale is a small vocabulary plus the rules that tie the
words together.  Here: five age words over the natural numbers.
"""

from softscale import (Implication, biordinal_scale, build_lattice,
                       follows, implication_closure, scale_context)

# Two chains, most specific term first: minors are young are working
# age; the old are retired.  Working and retired exclude each other.
age = biordinal_scale("Age", ("minor", "young", "working"),
                      ("old", "retired"))

print("terms:", ", ".join(age.terms))
for imp in age.basis:
    print("rule: ", imp)

# the closure answers "what else must hold"
print()
print("closure of {minor}: ", sorted(implication_closure(age, {"minor"})))
print("closure of {old}:   ", sorted(implication_closure(age, {"old"})))
print("minor & old is", implication_closure(age, {"minor", "old"}))

# entailment queries without enumerating models
print()
print("minor => working?", follows(age, Implication({"minor"},
                                                     {"working"})))
print("young => minor? ", follows(age, Implication({"young"},
                                                   {"minor"})))

# every consistent combination of terms becomes one row of a formal
# context; the lattice of that context is the scale's concept hierarchy
ctx = scale_context(age)
print()
print("derived context rows (columns: %s)" % " ".join(ctx.attributes))
for i, row in enumerate(ctx.matrix):
    print(" row %d: %s" % (i, "".join("x" if v else "." for v in row)))

lattice = build_lattice(ctx)
print()
print("%d concepts, covering pairs:" % len(lattice.concepts))
for low, up in lattice.covers:
    print("  %d is covered by %d" % (low, up))
