"""Independent face tracer for rotation systems given as JSON {"rot": [...]}."""
import json
import sys


def trace(rot):
    seen = set()
    faces = []
    for a in range(len(rot)):
        for b in rot[a]:
            if (a, b) in seen:
                continue
            walk = []
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                r = rot[b]
                c = r[(r.index(a) - 1) % len(r)]
                a, b = b, c
            faces.append(walk)
    return faces


if __name__ == "__main__":
    data = json.load(sys.stdin)
    faces = trace(data["rot"])
    print(len(faces), faces)
