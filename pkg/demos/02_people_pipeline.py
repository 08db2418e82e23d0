"""
From documents to a browsable lattice
=====================================

The full pipeline: an ontology document declares the scale, a
collection document binds each term to a query over object metadata,
and a CSV carries the metadata itself.
"""

from softscale import (build_browse_space, contingents, concrete_scales,
                       lattice_to_dot, load_dataset, parse_collection,
                       parse_ontology)

ONTOLOGY = """\
<ONTOLOGY NAME="Person" VERSION="1.0">
 <CATEGORY NAME="Person"/>
 <FNSCHEMA NAME="age" ARGTYPE="Person" IMAGETYPE="Integer"/>
 <SCALE CATEGORY="Person" NAME="Age">
  <TERM NAME="Young"/>
  <TERM NAME="Old"/>
  <TERM NAME="Working"/>
  <TERM NAME="Minor"/>
  <TERM NAME="Retired"/>
  <IMPLICATION><IF><TERM NAME="Minor"/></IF>
   <THEN><TERM NAME="Young"/></THEN></IMPLICATION>
  <IMPLICATION><IF><TERM NAME="Young"/></IF>
   <THEN><TERM NAME="Working"/></THEN></IMPLICATION>
  <IMPLICATION><IF><TERM NAME="Old"/></IF>
   <THEN><TERM NAME="Retired"/></THEN></IMPLICATION>
  <IMPLICATION><IF><TERM NAME="Working"/><TERM NAME="Retired"/></IF>
  </IMPLICATION>
 </SCALE>
</ONTOLOGY>
"""

COLLECTION = """\
<COLLECTION KIND="attribute" SCOPE="People">
 <USES ONTOLOGY="Person" VERSION="1.0"/>
 <ATTRIBUTE SCALE="Age" KEY="Minor">
  <QUERY VARIABLE="person" CATEGORY="People">
   <FN2REL NAME="age" ORDER="less-equal">
    <ARGUMENT VALUE="person"/><ARGUMENT VALUE="18"/></FN2REL>
  </QUERY>
 </ATTRIBUTE>
 <ATTRIBUTE SCALE="Age" KEY="Young">
  <QUERY VARIABLE="person" CATEGORY="People">
   <FN2REL NAME="age" ORDER="less">
    <ARGUMENT VALUE="person"/><ARGUMENT VALUE="40"/></FN2REL>
  </QUERY>
 </ATTRIBUTE>
 <ATTRIBUTE SCALE="Age" KEY="Working">
  <QUERY VARIABLE="person" CATEGORY="People">
   <FN2REL NAME="age" ORDER="less-equal">
    <ARGUMENT VALUE="person"/><ARGUMENT VALUE="65"/></FN2REL>
  </QUERY>
 </ATTRIBUTE>
 <ATTRIBUTE SCALE="Age" KEY="Retired">
  <QUERY VARIABLE="person" CATEGORY="People">
   <FN2REL NAME="age" ORDER="greater">
    <ARGUMENT VALUE="person"/><ARGUMENT VALUE="65"/></FN2REL>
  </QUERY>
 </ATTRIBUTE>
 <ATTRIBUTE SCALE="Age" KEY="Old">
  <QUERY VARIABLE="person" CATEGORY="People">
   <FN2REL NAME="age" ORDER="greater-equal">
    <ARGUMENT VALUE="person"/><ARGUMENT VALUE="80"/></FN2REL>
  </QUERY>
 </ATTRIBUTE>
</COLLECTION>
"""

DATA = """\
Person,age
Adam,21
Betty,50
Chris,66
Dora,88
Eva,17
Fred,?
George,90
Harry,50
"""

onto = parse_ontology(ONTOLOGY)
coll = parse_collection(COLLECTION, onto)
functions = load_dataset(DATA, onto)

# binding the queries checks them against the scale's rules: a query
# assignment that broke an implication would be rejected here
(cs, fn_name), = concrete_scales(onto, coll)
print("scale %r over description function %r" % (cs.abstract.name,
                                                 fn_name))

# each term's contingent: what it means after subtracting the more
# specific terms below it
for term, query in contingents(cs).items():
    print("  %-8s exactly:" % term, query)

facet, lattice = build_browse_space(onto, coll, functions)

print()
print("who sits where (objects at their generating concept):")
for i in range(len(lattice.concepts)):
    objs = lattice.contingent_objects(i)
    attrs = lattice.contingent_attributes(i)
    if objs or attrs:
        print("  concept %d  %-10s %s" % (i, " ".join(attrs) or "-",
                                          " ".join(objs) or "-"))

# Fred has no recorded age, so no term applies and he floats to the top
top = lattice.index(lattice.top)
print()
print("at the top (nothing known):",
      " ".join(lattice.contingent_objects(top)))

# the same picture as Graphviz source, ready for dot -Tpng
print()
print(lattice_to_dot(lattice))
