"""Writes the golden frieze grids from reference arrays typed in by hand
(not computed) using the documented grid layout:
labels "(k)", cells right-aligned to the widest cell or label, one space
between cells, header row first."""

from pathlib import Path

IDX = list(range(-5, 6))

CONSTANT2 = [[j - i for j in IDX] for i in IDX]

BUMP = [
    [0, 1, 2, 3, 4, 9, 14, 19, 24, 29, 34],
    [-1, 0, 1, 2, 3, 7, 11, 15, 19, 23, 27],
    [-2, -1, 0, 1, 2, 5, 8, 11, 14, 17, 20],
    [-3, -2, -1, 0, 1, 3, 5, 7, 9, 11, 13],
    [-4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6],
    [-9, -7, -5, -3, -1, 0, 1, 2, 3, 4, 5],
    [-14, -11, -8, -5, -2, -1, 0, 1, 2, 3, 4],
    [-19, -15, -11, -7, -3, -2, -1, 0, 1, 2, 3],
    [-24, -19, -14, -9, -4, -3, -2, -1, 0, 1, 2],
    [-29, -23, -17, -11, -5, -4, -3, -2, -1, 0, 1],
    [-34, -27, -20, -13, -6, -5, -4, -3, -2, -1, 0],
]

ENOUGH_ONES = [
    [0, 1, 5, 4, 15, 11, 7, 10, 3, 5, 2],
    [-1, 0, 1, 1, 4, 3, 2, 3, 1, 2, 1],
    [-5, -1, 0, 1, 5, 4, 3, 5, 2, 5, 3],
    [-4, -1, -1, 0, 1, 1, 1, 2, 1, 3, 2],
    [-15, -4, -5, -1, 0, 1, 2, 5, 3, 10, 7],
    [-11, -3, -4, -1, -1, 0, 1, 3, 2, 7, 5],
    [-7, -2, -3, -1, -2, -1, 0, 1, 1, 4, 3],
    [-10, -3, -5, -2, -5, -3, -1, 0, 1, 5, 4],
    [-3, -1, -2, -1, -3, -2, -1, -1, 0, 1, 1],
    [-5, -2, -5, -3, -10, -7, -4, -5, -1, 0, 1],
    [-2, -1, -3, -2, -7, -5, -3, -4, -1, -1, 0],
]


def layout(rows, cols, grid):
    labels = [f"({c})" for c in cols]
    width = max([len(x) for x in labels] + [len(str(v)) for r in grid for v in r])
    row_width = max(len(f"({r})") for r in rows)
    lines = [" " * row_width + "".join(" " + x.rjust(width) for x in labels)]
    for r, values in zip(rows, grid):
        lines.append(f"({r})".rjust(row_width) + "".join(" " + str(v).rjust(width) for v in values))
    return "\n".join(lines) + "\n"


here = Path(__file__).parent
for name, grid in [("constant2", CONSTANT2), ("bump", BUMP), ("enough_ones", ENOUGH_ONES)]:
    (here / f"{name}.frieze.txt").write_text(layout(IDX, IDX, grid))
