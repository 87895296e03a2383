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
"""Two-sided Pearson p-values for a grid of (r, n).

mpmath at 50 digits is the reference; scipy.stats is cross-checked.

    python3 pearson_reference.py > ../data/pearson_pvalues.json
"""

import json

import mpmath
from scipy import stats

mpmath.mp.dps = 50

RS = [0.05, -0.1, 0.2, -0.3, 0.5, 0.7, -0.8, 0.9, 0.95, -0.99]
NS = [3, 5, 10, 30, 250]


def reference_p(r, n):
    df = n - 2
    x = 1 - mpmath.mpf(r) ** 2
    return mpmath.betainc(mpmath.mpf(df) / 2, mpmath.mpf(1) / 2, 0, x,
                          regularized=True)


def main():
    rows = []
    for r in RS:
        for n in NS:
            p = float(reference_p(r, n))
            half = n / 2 - 1
            sp = 2 * stats.beta(half, half, loc=-1, scale=2).sf(abs(r))
            assert abs(sp - p) <= 1e-10 * max(p, 1e-300) + 1e-15, (r, n, p, sp)
            rows.append({"r": r, "n": n, "p": p})
    print(json.dumps(rows, indent=1))


if __name__ == "__main__":
    main()
