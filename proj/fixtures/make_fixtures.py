#!/usr/bin/env python3
"""Generate the binary image fixtures and record independently counted
pixel statistics in manifest.json. Run from the fixtures/ directory."""
import json

from PIL import Image

W = H = 64
BAR_LO, BAR_HI = 30, 34        # 4 px thick bars
SPAN_LO, SPAN_HI = 8, 56       # 48 px long

img = Image.new("L", (W, H), 0)
px = img.load()
count = 0
for y in range(H):
    for x in range(W):
        horiz = BAR_LO <= y < BAR_HI and SPAN_LO <= x < SPAN_HI
        vert = BAR_LO <= x < BAR_HI and SPAN_LO <= y < SPAN_HI
        if horiz or vert:
            px[x, y] = 1
            count += 1
img.save("walls_cross.png")

# Same raster as binary PGM for the zero-dependency code path.
with open("walls_cross.pgm", "wb") as f:
    f.write(b"P5\n64 64\n255\n")
    f.write(bytes(px[x, y] for y in range(H) for x in range(W)))

manifest = {
    "walls_cross.png": {
        "width": W,
        "height": H,
        "foreground_labels": [1],
        "foreground_count": count,
        # Frozen after one pipeline run inspected against an SVG overlay
        # of the raster (tolerance 1.5 px, min segment length 4 px).
        "wall_segments": 4,
    },
    "walls_cross.pgm": {
        "width": W,
        "height": H,
        "foreground_labels": [1],
        "foreground_count": count,
        "wall_segments": 4,
    },
    "apartment_7rooms.json": {
        "nodes": 7,
        "edge_type_counts": {"door": 4, "entrance": 1, "passage": 2},
    },
}
with open("manifest.json", "w") as f:
    json.dump(manifest, f, indent=2)
    f.write("\n")
print("foreground pixels:", count)
