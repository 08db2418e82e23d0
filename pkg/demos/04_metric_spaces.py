"""
Distances as truth values
=========================

The same machinery that scales crisp attributes runs over any
valuation.  With the real valuation, "how true" becomes "how far":
the unit is distance 0, conjunction adds distances, and implication
is the slack left over.
"""

import numpy as np

from softscale import (ApproximationSpace, BOOLEAN, FUZZY, REAL,
                       VPredicate, VSpace, lower_approx, power_metric,
                       upper_approx, yoneda)

# a three-city travel-time space (hours), deliberately asymmetric:
# downhill back from aachen is quicker; reflexive and triangle-closed,
# which is all a space asks for
cities = ("aachen", "brussels", "cologne")
hours = np.array([
    [0.0, 2.0, 1.0],
    [1.0, 0.0, 2.0],
    [1.0, 2.0, 0.0],
])
space = VSpace(REAL, cities, hours)

# an element is represented by its row of departure times
print("view from aachen:",
      {c: float(v) for c, v in zip(cities,
                                   yoneda(space, "aachen").values)})

near_a = yoneda(space, "aachen")
near_b = yoneda(space, "brussels")

# the power metric between two represented points recovers travel time,
# direction included
print("aachen view to brussels view:",
      power_metric(near_a, near_b), "hours")
print("brussels view to aachen view:",
      power_metric(near_b, near_a), "hours")

# rough approximation over a symmetric similarity: what part of a
# fuzzy set is certain, what part is possible
people = ("a", "b", "c")
similarity = np.array([
    [1.0, 0.6, 0.4],
    [0.6, 1.0, 0.4],
    [0.4, 0.4, 1.0],
])
approx = ApproximationSpace(FUZZY, people, similarity)
fuzzy_set = VPredicate(approx, np.array([1.0, 0.5, 0.2]))

print()
print("set:     ", [float(v) for v in fuzzy_set.values])
print("certain: ", [float(v)
                    for v in lower_approx(fuzzy_set, approx).values])
print("possible:", [float(v)
                    for v in upper_approx(fuzzy_set, approx).values])

# boolean case: the classical rough picture over equivalence classes
classes = np.array([
    [1.0, 1.0, 0.0],
    [1.0, 1.0, 0.0],
    [0.0, 0.0, 1.0],
])
crisp = ApproximationSpace(BOOLEAN, people, classes)
subset = VPredicate(crisp, np.array([1.0, 0.0, 1.0]))
print()
print("subset {a, c} against classes {a,b} {c}:")
print("  lower:", [g for g, v in zip(people,
                                     lower_approx(subset, crisp).values)
                   if v])
print("  upper:", [g for g, v in zip(people,
                                     upper_approx(subset, crisp).values)
                   if v])
