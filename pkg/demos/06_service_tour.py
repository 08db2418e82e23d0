"""
A tour of the browsing service
==============================

The HTTP service hosts conceptual spaces and lets many sessions walk
one lattice together.  This script drives the API in process; against
a running `softscale serve` the same calls are plain HTTP:

    curl -F ontology=@o.xml -F collection=@c.xml -F dataset=@d.csv \
        http://localhost:8000/spaces
    curl -X POST http://localhost:8000/spaces/<id>/sessions
    curl -X POST -H 'Content-Type: application/json' \
        -d '{"elements": ["Working"]}' \
        http://localhost:8000/sessions/<id>/meet
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from softscale.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

client = TestClient(create_app())

resp = client.post("/spaces", files={
    "ontology": ("o.xml", (FIXTURES / "person.ckml.xml").read_bytes()),
    "collection": ("c.xml",
                   (FIXTURES / "people-attrs.ckml.xml").read_bytes()),
    "dataset": ("d.csv", (FIXTURES / "people.csv").read_bytes()),
})
space = resp.json()["spaceId"]
print("registered space", space)

session = client.post(f"/spaces/{space}/sessions").json()["sessionId"]
print("opened session", session)

# a fresh session sits at the top concept: everything, nothing assumed
state = client.get(f"/sessions/{session}/state").json()
print("at the top:", state["current"]["extent"])

# narrow down to the working people
state = client.post(f"/sessions/{session}/meet",
                    json={"elements": ["Working"]}).json()
print()
print("after meet(Working):")
print("  extent:    ", state["current"]["extent"])
print("  exactly here:", state["current"]["contingentObjects"])

# how every element relates to where we stand
print("  element labels:")
for row in state["elements"]:
    print("    %-8s %-9s sim %d" % (row["name"], row["relation"],
                                    row["similarity"]))

# bookmark this place; every session on the space sees the view
client.post(f"/sessions/{session}/views",
            json={"name": "staff", "agent": "demo"})
other = client.post(f"/spaces/{space}/sessions").json()["sessionId"]
state = client.get(f"/sessions/{other}/state").json()
staff = [r for r in state["elements"] if r["name"] == "staff"][0]
print()
print("second session sees view 'staff':", staff["relation"],
      "(by %s)" % staff["agent"])

# intentional mode reads the lattice upside down
state = client.post(f"/sessions/{other}/mode",
                    json={"mode": "intentional"}).json()
staff = [r for r in state["elements"] if r["name"] == "staff"][0]
print("in intentional mode it reads:", staff["relation"])

# the whole lattice, one JSON document
doc = client.get(f"/spaces/{space}/lattice").json()
print()
print("lattice summary:", len(doc["concepts"]), "concepts,",
      len(doc["covers"]), "covering pairs,",
      len(doc["views"]), "view(s)")
print(json.dumps(doc["concepts"][0], indent=2))
