"""A direct port of the quad-list central degree counter (C++ listing).

Kept deliberately literal, including the integer division that makes the
window margin zero, so it can serve as an independent oracle for the
``dump --compat-quad`` output.
"""


def central_average(text: str) -> tuple[int, float, float | None]:
    arr = []
    max_x = max_y = 0.0
    min_x = min_y = 10000.0
    tokens = text.split()
    for i in range(0, len(tokens) - 1, 2):
        x, y = float(tokens[i]), float(tokens[i + 1])
        if x == 0 and y == 0:
            break
        max_x, max_y = max(max_x, x), max(max_y, y)
        min_x, min_y = min(min_x, x), min(min_y, y)
        arr.append([x, y, len(arr) // 4 + 1])
    kx = (1 // 3) * (max_x - min_x)
    ky = (max_y - min_y) * (1 // 3)

    def quad(i):
        return [tuple(arr[i + k][:2]) for k in range(4)]

    # zero later copies of identical quads (same corners in the same order)
    first = {}
    for i in range(0, len(arr), 4):
        q = tuple(quad(i))
        if q in first and arr[i][2] != 0:
            for k in range(4):
                arr[i + k] = [0.0, 0.0, 0]
        else:
            first.setdefault(q, i)

    kept = []
    seen = set()
    for x, y, tag in arr:
        if x == 0 and y == 0 and tag == 0:
            continue
        if (x, y) in seen:
            continue
        if min_x + kx < x < max_x - kx and min_y + ky < y < max_y - ky:
            seen.add((x, y))
            kept.append((x, y))
    occurrences = {}
    for x, y, _ in arr:
        occurrences[(x, y)] = occurrences.get((x, y), 0) + 1
    total = sum(occurrences[p] for p in kept)
    count = len(arr)
    return count, float(total), (total / len(kept) if kept else None)
