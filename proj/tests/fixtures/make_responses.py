#!/usr/bin/env python3
"""Regenerates responses.csv.

Synthetic 30-respondent survey over 5 samples and 6 bipolar pairs. Column
sums are pinned so that per-sample means over the two word triads match the
documented averages:

  {Beautiful, Clear, Innovative}:      S5 4.30, S4 3.97, S3 3.88 (then S2, S1)
  {Comprehensive, Reliable, Bright}:   S5 4.12, S4 3.84, S2 3.79 (then S3, S1)

Individual ratings are spread deterministically from a fixed seed. The
"Beautiful" columns hand the higher ratings to male respondents so the
gender boxplots show a visible split.
"""

import random

SEED = 20240817
N = 30
MALES = 17  # respondents R01..R17; R18..R30 are female

SAMPLES = ["S1", "S2", "S3", "S4", "S5"]
WORDS = ["Beautiful", "Innovative", "Comprehensive", "Bright", "Clear", "Reliable"]

COLUMN_SUMS = {
    # Beautiful / Clear / Innovative triad
    ("S5", "Beautiful"): 130, ("S5", "Clear"): 129, ("S5", "Innovative"): 128,
    ("S4", "Beautiful"): 120, ("S4", "Clear"): 119, ("S4", "Innovative"): 118,
    ("S3", "Beautiful"): 117, ("S3", "Clear"): 116, ("S3", "Innovative"): 116,
    ("S2", "Beautiful"): 107, ("S2", "Clear"): 107, ("S2", "Innovative"): 106,
    ("S1", "Beautiful"): 100, ("S1", "Clear"): 100, ("S1", "Innovative"): 100,
    # Comprehensive / Reliable / Bright triad
    ("S5", "Comprehensive"): 124, ("S5", "Reliable"): 124, ("S5", "Bright"): 123,
    ("S4", "Comprehensive"): 116, ("S4", "Reliable"): 115, ("S4", "Bright"): 115,
    ("S2", "Comprehensive"): 114, ("S2", "Reliable"): 114, ("S2", "Bright"): 113,
    ("S3", "Comprehensive"): 112, ("S3", "Reliable"): 112, ("S3", "Bright"): 111,
    ("S1", "Comprehensive"): 110, ("S1", "Reliable"): 110, ("S1", "Bright"): 110,
}


def spread_column(rng, total):
    base = total // N
    values = [base] * N
    for i in range(N):
        values[i] = min(5, max(1, values[i] + rng.choice([-1, -1, 0, 0, 0, 1, 1])))
    diff = total - sum(values)
    while diff != 0:
        i = rng.randrange(N)
        if diff > 0 and values[i] < 5:
            values[i] += 1
            diff -= 1
        elif diff < 0 and values[i] > 1:
            values[i] -= 1
            diff += 1
    return values


def main():
    rng = random.Random(SEED)
    columns = {}
    for sample in SAMPLES:
        for word in WORDS:
            values = spread_column(rng, COLUMN_SUMS[(sample, word)])
            if word == "Beautiful":
                values.sort(reverse=True)  # males first -> higher Beautiful ratings
            columns[(sample, word)] = values

    header = ["respondent", "gender"]
    for sample in SAMPLES:
        for word in WORDS:
            header.append(f"{sample}|{word}")

    lines = [",".join(header)]
    for r in range(N):
        rid = f"R{r + 1:02d}"
        gender = "Male" if r < MALES else "Female"
        row = [rid, gender]
        for sample in SAMPLES:
            for word in WORDS:
                row.append(str(columns[(sample, word)][r]))
        lines.append(",".join(row))

    with open("responses.csv", "w", newline="") as out:
        out.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
