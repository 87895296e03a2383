# Copyright 2026 The Simpeval Authors.
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
"""Writes data/fixtures/worked_example.json, the Rostov audit example.

Answers are the published ones. Embeddings are 3-d vectors chosen so that
greedy matching gives the published similarities:

  "the Soviet years" / "Soviet years": P = (1 + 1 + 15/37) / 3, R = 1, F1 = 0.89
  "demolished" / "destroyed":          cosine 0.82

Entries carry no "key"; the store derives keys from the requests.
"""

import json
import math
import os
import sys

SOURCE = ("In the Soviet years, the Bolsheviks demolished two of Rostov's principal "
          "landmarks- St Alexander Nevsky cathedral (1908) and St George cathedral "
          "in Nakhichevan (1783-1807).")
SIMPLIFICATION = ("The Bolsheviks destroyed St. Alexander Nevsky cathedral and St. George "
                  "cathedral in Nakhichevan during the Soviet years.")

ROWS = [
    ("When did the Bolsheviks demolish St George cathedral?", "the Soviet years",
     "Soviet years"),
    ("Who demolished St Alexander Nevsky cathedral?", "demolished", "destroyed"),
    ("How many of Rostov's main landmarks were demolished?", "two", None),
    ("What cathedral was demolished in 1908?", "Rostov", None),
]

THE_COS = 15.0 / 37.0
DESTROYED_COS = 0.82
EMBEDDINGS = {
    "the Soviet years": (["the", "soviet", "years"],
                         [[THE_COS, math.sqrt(1 - THE_COS ** 2), 0.0],
                          [1.0, 0.0, 0.0],
                          [0.0, 0.0, 1.0]]),
    "Soviet years": (["soviet", "years"], [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]),
    "demolished": (["demolished"], [[1.0, 0.0, 0.0]]),
    "destroyed": (["destroyed"],
                  [[DESTROYED_COS, math.sqrt(1 - DESTROYED_COS ** 2), 0.0]]),
}


def qa(question, context, answer):
    return {"request": {"kind": "qa", "question": question, "context": context},
            "response": {"answer": answer or "", "unanswerable": answer is None}}


def main():
    entries = [{
        "request": {"kind": "qg", "text": SOURCE, "max_questions": 10},
        "response": {"questions": [q for q, _, _ in ROWS]},
    }]
    for question, on_source, on_simplification in ROWS:
        entries.append(qa(question, SOURCE, on_source))
        entries.append(qa(question, SIMPLIFICATION, on_simplification))
    for text, (tokens, vectors) in EMBEDDINGS.items():
        entries.append({"request": {"kind": "embed", "texts": [text]},
                        "response": {"tokens": [tokens], "vectors": [vectors], "dim": 3}})
    doc = {"format": "simpeval-fixtures/1", "entries": entries}
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    path = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        root, "data", "fixtures", "worked_example.json")
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
