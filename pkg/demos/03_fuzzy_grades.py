# Graded membership instead of hard thresholds.
#
# The crisp Age scale says a 39-year-old is young and a 40-year-old is
# not.  With the fuzzy valuation each term gets a membership curve and
# the scaled facet carries degrees in [0, 1].

from softscale import (DescriptionFunction, FUZZY, NaturalType, VSpace,
                       biordinal_scale, make_enriched_scale,
                       simple_scaling, term_metric)

age = biordinal_scale("Age", ("minor", "young", "working"),
                      ("old", "retired"))

ages = {"Adam": 21, "Betty": 50, "Chris": 66, "Dora": 88,
        "Eva": 17, "George": 90, "Harry": 50}


def ramp_down(d, one_until, zero_at):
    if d <= one_until:
        return 1.0
    if d >= zero_at:
        return 0.0
    return (zero_at - d) / (zero_at - one_until)


def ramp_up(d, zero_until, one_at):
    return ramp_down(-d, -one_at, -zero_until)


# each curve must dominate the curves of the terms that entail it,
# otherwise make_enriched_scale refuses the assignment
curves = {
    "minor": lambda d: ramp_down(d, 16, 20),
    "young": lambda d: ramp_down(d, 20, 40),
    "working": lambda d: ramp_down(d, 60, 70),
    "retired": lambda d: ramp_up(d, 60, 65),
    "old": lambda d: ramp_up(d, 70, 85),
}

observed = sorted(set(ages.values()))
data_space = VSpace.discrete(FUZZY, tuple(str(d) for d in observed))
crisp = term_metric(age)
term_space = VSpace(FUZZY, crisp.elements, crisp.metric)

scale = make_enriched_scale(term_space, data_space,
                            lambda m, d: curves[m](int(d)))

phi = DescriptionFunction("age", "Person", NaturalType(),
                          tuple(ages), dict(ages))
facet = simple_scaling(phi, scale)

print("graded facet (rows: people, columns: %s)"
      % " ".join(facet.attributes))
for g in facet.objects:
    grades = "  ".join("%4.2f" % facet.incidence(g, m)
                       for m in facet.attributes)
    print("  %-7s %s" % (g, grades))

# Adam is 21: just past the minor ramp, still almost fully young
print()
print("Adam young to degree", facet.incidence("Adam", "young"))
print("Adam minor to degree", facet.incidence("Adam", "minor"))
