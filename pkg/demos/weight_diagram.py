"""
A weight diagram with its epsilon domains
=========================================

Draws the dominant weights of R(10, 9) on the [x, y] = [m, m+2n] grid.
Each cell shows the multiplicity; the suffix marks the domain of the
second recurrence (+ for 1, . for 0, - for -1).
"""
from weightgen.cli import table_document
from weightgen.recurrences import overlap_region

p, q = 10, 9
doc = table_document("C2", p, q, overlay="epsilon")
print(f"R({p},{q}): dimension {doc['dimension']}, {len(doc['entries'])} dominant weights")
print("overlap region:", *overlap_region(p, q))

cells = {(e["x"], e["y"]): e for e in doc["entries"]}
mark = {1: "+", 0: ".", -1: "-"}
top = max(y for _, y in cells)
right = max(x for x, _ in cells)
# x and y share the parity of p, so half the grid is empty
for y in range(top, -1, -2):
    row = []
    for x in range(p % 2, right + 1, 2):
        e = cells.get((x, y))
        row.append(f"{e['mult']:>3}{mark[e['domain']]}" if e else "    ")
    print(f"{y:>3} |" + "".join(row).rstrip())
print("    +" + "-" * 2 * (right + 1))
