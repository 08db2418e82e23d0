# Scaling aggregates: attributes of groups from attributes of members.
#
# Once people are scaled, organizations of people can be scaled through
# a membership relation.  A group counts as "young" exactly as far as
# its least young member lets it.

import numpy as np

from softscale import (BOOLEAN, FUZZY, Facet, VSpace, composite_scaling,
                       relation_from_entries)

people = VSpace.discrete(BOOLEAN, ("ann", "ben", "cleo"))
terms = VSpace.discrete(BOOLEAN, ("young",))

# ann and ben are young, cleo is not
member_facet = Facet(people, terms, np.array([[1.0], [1.0], [0.0]]))

orgs = VSpace.discrete(BOOLEAN, ("choir", "board"))
membership = relation_from_entries(people, orgs, {
    ("ann", "choir"): 1.0,
    ("ben", "choir"): 1.0,
    ("ben", "board"): 1.0,
    ("cleo", "board"): 1.0,
})

scaled = composite_scaling(membership, member_facet)
for o in scaled.objects:
    print("%s: all members young?" % o,
          bool(scaled.incidence(o, "young")))

# the fuzzy version degrades gracefully: membership and youth both
# come in degrees, and the group grade is the worst "member implies
# young" score
fpeople = VSpace.discrete(FUZZY, ("ann", "ben", "cleo"))
fterms = VSpace.discrete(FUZZY, ("young",))
fuzzy_facet = Facet(fpeople, fterms, np.array([[0.95], [0.6], [0.2]]))
forgs = VSpace.discrete(FUZZY, ("choir", "board"))
fuzzy_membership = relation_from_entries(fpeople, forgs, {
    ("ann", "choir"): 1.0,
    ("ben", "choir"): 1.0,
    ("ben", "board"): 1.0,
    ("cleo", "board"): 0.4,   # cleo only sits in sometimes
})

fuzzy_scaled = composite_scaling(fuzzy_membership, fuzzy_facet)
print()
for o in fuzzy_scaled.objects:
    print("%s young to degree %.2f" % (o,
                                       fuzzy_scaled.incidence(o, "young")))

# an organization nobody belongs to is vacuously graded top
empty = relation_from_entries(fpeople,
                              VSpace.discrete(FUZZY, ("ghost-club",)),
                              {})
print()
print("ghost-club:", float(composite_scaling(empty,
                                             fuzzy_facet).matrix[0, 0]))
