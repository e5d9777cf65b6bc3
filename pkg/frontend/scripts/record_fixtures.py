"""Record real API responses as JSON fixtures for the console tests.

Run from the repository root:

    python3 frontend/scripts/record_fixtures.py

Spins the actual service (in-process) on the synthetic story corpus,
performs a create + refine round-trip, and snapshots every endpoint the
console consumes into frontend/tests/fixtures/.
"""

import json
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT))

from fastapi.testclient import TestClient

from storytrace.service import create_app
from storytrace.store import InvestigationStore
from tests.conftest import write_corpus_file
from tests.fixture_story import build_story

OUT = ROOT / "frontend" / "tests" / "fixtures"


def dump(name: str, payload) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / name).write_text(
        json.dumps(payload, ensure_ascii=False, indent=1), encoding="utf-8"
    )
    print(f"wrote {name}")


def main() -> None:
    fixture = build_story()
    tmp = Path(tempfile.mkdtemp(prefix="storytrace-fixtures-"))
    corpus_path = str(write_corpus_file(tmp / "story.jsonl", fixture.records))
    store = InvestigationStore(tmp / "store", default_corpus=corpus_path)
    client = TestClient(create_app(store))

    created = client.post("/investigations", json={"tweet_id": 1001})
    inv_id = created.json()["id"]
    dump("create_response.json", created.json())
    dump("investigation_draft.json", client.get(f"/investigations/{inv_id}").json())

    refined = client.put(f"/investigations/{inv_id}/config", json=fixture.config_doc)
    dump("put_config_ok.json", refined.json())
    dump("investigation.json", client.get(f"/investigations/{inv_id}").json())

    for kind in (
        "propagation",
        "timeline",
        "retweet_network",
        "coretweeted_network",
        "links",
        "summary",
        "metrics",
    ):
        dump(f"dataset_{kind}.json", client.get(f"/investigations/{inv_id}/datasets/{kind}").json())

    bad = client.put(
        f"/investigations/{inv_id}/config", json=dict(fixture.config_doc, optional_threshold=4)
    )
    dump("put_config_invalid.json", {"status": bad.status_code, "body": bad.json()})

    dump("stories_condensed.json", client.get("/stories").json())
    dump("stories_full.json", client.get("/stories", params={"view": "full"}).json())
    dump(
        "rate_avion.json",
        client.get("/keywords/rate", params={"investigation": inv_id, "term": "avión"}).json(),
    )
    dump(
        "suggest.json",
        client.get("/keywords/suggest", params={"investigation": inv_id, "k": 8}).json(),
    )

    break_time = client.get(f"/investigations/{inv_id}/datasets/summary").json()["break_time"]
    dump(
        "bin_listing_time_asc.json",
        client.get(f"/investigations/{inv_id}/bins/{break_time}").json(),
    )
    dump(
        "bin_listing_retweets_desc.json",
        client.get(
            f"/investigations/{inv_id}/bins/{break_time}",
            params={"sort": "retweets", "direction": "desc"},
        ).json(),
    )
    dump("tweet_1001.json", client.get(f"/investigations/{inv_id}/tweets/1001").json())
    dump("user_101.json", client.get(f"/investigations/{inv_id}/users/101").json())
    print(f"investigation id: {inv_id}")


if __name__ == "__main__":
    main()
