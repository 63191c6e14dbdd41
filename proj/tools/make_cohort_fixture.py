#!/usr/bin/env python3
# Copyright 2026 The Affectix Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/corpora/cohort: synthetic interview transcripts for a
two-group cohort (20 control, 20 mania). Each subject gets a target rate of
high-affect words; sentences mix affect words from the fixture lexicon tails
with neutral filler at that rate. Deterministic for a given --seed."""

import argparse
import csv
import pathlib
import random

AFFECT = ["pain", "grief", "hate", "scream", "tears", "afraid", "lonely",
          "smile", "happy", "delight", "laughter", "wonderful", "joy",
          "beautiful", "love"]
FILLER = ["i", "went", "to", "the", "house", "and", "my", "mother", "was",
          "there", "we", "talked", "about", "work", "then", "slept", "saw",
          "a", "dog", "in", "street", "after", "dinner", "with", "friends",
          "car", "night", "morning", "door", "brother", "phone", "it",
          "that", "so", "walked", "home", "bus", "school", "remember",
          "dreamed", "people", "room", "window", "told", "me", "her", "him"]

GROUPS = [("control", 0.1168, 0.0277), ("mania", 0.1380, 0.0193)]


def sentence(rng, rate):
    n = rng.randint(6, 12)
    words = [rng.choice(AFFECT) if rng.random() < rate else rng.choice(FILLER)
             for _ in range(n)]
    words[0] = words[0].capitalize()
    return " ".join(words) + rng.choice([".", ".", ".", "!", "?"])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/corpora")
    ap.add_argument("--per-group", type=int, default=20)
    ap.add_argument("--sentences", type=int, default=14)
    ap.add_argument("--seed", type=int, default=2017)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    root = pathlib.Path(args.out)
    (root / "cohort").mkdir(parents=True, exist_ok=True)
    rows = []
    for label, mean, sd in GROUPS:
        for i in range(args.per_group):
            rate = min(max(rng.gauss(mean, sd), 0.0), 1.0)
            text = " ".join(sentence(rng, rate) for _ in range(args.sentences))
            name = f"{label}_{i + 1:02d}"
            (root / "cohort" / f"{name}.txt").write_text(text + "\n")
            rows.append((name, f"cohort/{name}.txt", label))
    with open(root / "cohort.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\r\n")
        w.writerow(["doc_id", "path", "label"])
        w.writerows(rows)


if __name__ == "__main__":
    main()
