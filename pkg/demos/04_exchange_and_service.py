"""Exchange lexicons as canonical JSON and edit them over HTTP.

The exchange format serializes a whole store (or a per-language slice) to a
canonical byte form: exporting, importing, and exporting again reproduces the
file byte for byte, and re-importing the same document is a no-op. The HTTP
service exposes the store for browsing and collaborative editing; every edit
attempt, including rejected ones, lands in an append-only changelog that can
be replayed to rebuild the database.
"""

from fastapi.testclient import TestClient

from lexdiv import exchange
from lexdiv.fixtures import build_alpine_store
from lexdiv.service import create_app, replay

# --- exchange round trip ---------------------------------------------------
store, concepts = build_alpine_store()
data = exchange.canonical_bytes(exchange.export_document(store))
print(f"exported {len(data)} bytes; first lines:")
print("\n".join(data.decode("utf-8").splitlines()[:6]))

reimported = exchange.import_document(exchange.loads(data.decode("utf-8")))
again = exchange.canonical_bytes(exchange.export_document(reimported))
print("round trip byte-identical:", again == data)

diagnostics = exchange.validate_document(exchange.loads(data.decode("utf-8")))
print("validation diagnostics on clean file:", diagnostics)

# --- an editing session against the service --------------------------------
client = TestClient(create_app(store))

rye = concepts["rye_bread"].id
badge = {l["language"]: l["status"]
         for l in client.get(f"/concepts/{rye}").json()["lexicalizations"]}
print("rye bread before edit:", badge)

response = client.post("/edits", json={
    "contributor": "anna", "action": "lexicalize",
    "args": {"interlingual": rye, "language": "mhn",
             "lemma": "roggenproat"}})
print("edit accepted, seq", response.json()["seq"])

badge = {l["language"]: l["status"]
         for l in client.get(f"/concepts/{rye}").json()["lexicalizations"]}
print("rye bread after edit: ", badge)

# marking a gap on a concept that already has a sense is rejected, but the
# failed attempt still shows up in the changelog
response = client.post("/edits", json={
    "contributor": "berta", "action": "mark_gap",
    "args": {"interlingual": concepts["bread"].id, "language": "mhn"}})
print("conflicting edit:", response.status_code, response.json()["code"])

for event in client.get("/changelog").json():
    print(f"  #{event['seq']} {event['contributor']:6} {event['action']:12}"
          f" {event['status']}")

# the changelog is a complete recipe for the current state
log = client.app.state.log
rebuilt, _ = build_alpine_store()
replay(log.events, rebuilt)
print("replay reproduces live store:",
      exchange.canonical_bytes(exchange.export_document(rebuilt))
      == exchange.canonical_bytes(exchange.export_document(store)))
