#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 servqual contributors
"""Regenerates the bundled test fixtures under tests/fixtures/.

planted_200.jsonl   100 labeled reviews, 2 sentences each (200 sentences),
                    5 hotels x 20 reviews. Every dimension draws its content
                    words from its own disjoint 10-word block; per-hotel label
                    counts plant a known weakest dimension.
planted_200_unlabeled.jsonl   the same reviews with labels removed.
table3.csv          four labeled example sentences, one per dimension.
table3_unlabeled.jsonl        the same sentences without labels.
"""
import csv
import json
import random
from pathlib import Path

BLOCKS = {
    "Assurance": ["trustworthy", "courteous", "knowledgeable", "competent", "reassuring",
                  "professional", "safe", "confident", "reliable", "polite"],
    "Empathy": ["caring", "personal", "individual", "understanding", "warm",
                "considerate", "compassionate", "thoughtful", "kind", "name"],
    "Responsiveness": ["quick", "prompt", "fast", "immediate", "responsive",
                       "speedy", "eager", "helpful", "swift", "willing"],
    "Tangible": ["pool", "villa", "view", "spa", "beach",
                 "garden", "bathroom", "breakfast", "room", "jungle"],
}
FILLER = ["the", "was", "very", "and", "our", "staff", "hotel"]

# reviews per dimension; the smallest count is each hotel's weakest dimension
HOTELS = {
    "mandapa": {"Assurance": 8, "Empathy": 5, "Responsiveness": 2, "Tangible": 5},
    "komaneka": {"Assurance": 6, "Empathy": 2, "Responsiveness": 4, "Tangible": 8},
    "viceroy": {"Assurance": 2, "Empathy": 4, "Responsiveness": 5, "Tangible": 9},
    "katamama": {"Assurance": 7, "Empathy": 4, "Responsiveness": 2, "Tangible": 7},
    "jamahal": {"Assurance": 5, "Empathy": 6, "Responsiveness": 2, "Tangible": 7},
}


def sentence(rng, label):
    words = rng.sample(BLOCKS[label], rng.randint(3, 5)) + rng.sample(FILLER, 2)
    rng.shuffle(words)
    return " ".join(words).capitalize()


def main():
    rng = random.Random(2018)
    out = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)

    records = []
    for hotel, counts in HOTELS.items():
        labels = [d for d, n in counts.items() for _ in range(n)]
        rng.shuffle(labels)
        for i, label in enumerate(labels):
            text = f"{sentence(rng, label)}. {sentence(rng, label)}!"
            records.append({"hotel_id": hotel, "review_id": f"r{i:02d}", "text": text, "label": label})

    with open(out / "planted_200.jsonl", "w") as f:
        for r in records:
            f.write(json.dumps(r) + "\n")
    with open(out / "planted_200_unlabeled.jsonl", "w") as f:
        for r in records:
            f.write(json.dumps({k: v for k, v in r.items() if k != "label"}) + "\n")

    table3 = [
        ("The staffs are beyond brilliant, each one genuinely Lovely and so helpful.", "Assurance"),
        ("Staffs greet by name.", "Empathy"),
        ("Very attentive and pro-active staffs", "Responsiveness"),
        ("This is an amazing hotel in the jungle with beautiful view.", "Tangible"),
    ]
    with open(out / "table3.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["hotel_id", "review_id", "text", "label"])
        for i, (text, label) in enumerate(table3):
            w.writerow(["H1", f"R{i + 1}", text, label])
    with open(out / "table3_unlabeled.jsonl", "w") as f:
        for i, (text, _) in enumerate(table3):
            f.write(json.dumps({"hotel_id": "H1", "review_id": f"R{i + 1}", "text": text}) + "\n")


if __name__ == "__main__":
    main()
