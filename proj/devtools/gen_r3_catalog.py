#!/usr/bin/env python3
"""Derives the table of valid Reidemeister-III local configurations on Gauss
diagrams from explicit plane geometry, and prints it as a C++ initializer.

Setup: three oriented lines forming a triangle.
  L0: y = 0, direction (e0, 0)
  L1: x = 0, direction (0, e1)
  L2: x + y = c, direction e2 * (-1, 1)
The move slides L2 from c = +1 to c = -1 (or back), legal when L2 is extreme
in the over/under height order. Crossings: X = L0^L1, Y = L0^L2, Z = L1^L2.

A configuration is summarized by a 9-bit signature under an arrow labeling
(x, y, z) where strand P carries endpoints of x,y; Q carries x,z; R carries
y,z:
  bit 0..2: sign of x, y, z is positive
  bit 3..5: head of x on P; head of y on P; head of z on Q
  bit 6..8: on P the x-endpoint comes first; on Q x first; on R y first
The matcher computes the same signature for any candidate arrow triple
(arrows sorted by index); the catalog is closed over all 6 labelings.
"""
import itertools

def sign(v):
    return 1 if v > 0 else -1

def crossing_data(c, e0, e1, e2, h):
    """Returns per-crossing and per-line data for offset c.

    Crossings X=(L0,L1), Y=(L0,L2), Z=(L1,L2).
    For each line, the param of each crossing on it (along orientation).
    """
    d = [(e0, 0.0), (0.0, e1), (-e2 / 2**0.5, e2 / 2**0.5)]
    pts = {
        'X': (0.0, 0.0),
        'Y': (c, 0.0),     # on L0: y=0, x+y=c
        'Z': (0.0, c),     # on L1
    }
    lines_of = {'X': (0, 1), 'Y': (0, 2), 'Z': (1, 2)}
    base = [(0.0, 0.0), (0.0, 0.0), (0.0, c)]  # param origin per line
    def param(line, pt):
        dx, dy = pt[0] - base[line][0], pt[1] - base[line][1]
        return dx * d[line][0] + dy * d[line][1]  # projection on unit-ish dir
    info = {}
    for cr, (la, lb) in lines_of.items():
        over, under = (la, lb) if h[la] > h[lb] else (lb, la)
        det = d[over][0] * d[under][1] - d[over][1] * d[under][0]
        info[cr] = {
            'lines': (la, lb),
            'over': over,
            'sgn': sign(det),
            'param': {la: param(la, pts[cr]), lb: param(lb, pts[cr])},
        }
    return info

def signature(info, labeling):
    """labeling: dict role->crossing name, roles 'x','y','z'.
    Strand P = common line of x,y; Q of x,z; R of y,z."""
    cx, cy, cz = labeling['x'], labeling['y'], labeling['z']
    def common(a, b):
        s = set(info[a]['lines']) & set(info[b]['lines'])
        assert len(s) == 1
        return s.pop()
    P, Q, R = common(cx, cy), common(cx, cz), common(cy, cz)
    bits = 0
    if info[cx]['sgn'] > 0: bits |= 1 << 0
    if info[cy]['sgn'] > 0: bits |= 1 << 1
    if info[cz]['sgn'] > 0: bits |= 1 << 2
    # head on strand s <=> strand s is the under line of that crossing
    if info[cx]['over'] != P: bits |= 1 << 3
    if info[cy]['over'] != P: bits |= 1 << 4
    if info[cz]['over'] != Q: bits |= 1 << 5
    if info[cx]['param'][P] < info[cy]['param'][P]: bits |= 1 << 6
    if info[cx]['param'][Q] < info[cz]['param'][Q]: bits |= 1 << 7
    if info[cy]['param'][R] < info[cz]['param'][R]: bits |= 1 << 8
    return bits

valid = set()
for c in (1.0, -1.0):
    for e0, e1, e2 in itertools.product((1, -1), repeat=3):
        for h2 in (0, 2):  # sliding line must be extreme in height
            for h0, h1 in itertools.permutations([x for x in (0, 1, 2) if x != h2]):
                h = (h0, h1, h2)
                info = crossing_data(c, e0, e1, e2, h)
                for perm in itertools.permutations('XYZ'):
                    lab = dict(zip('xyz', perm))
                    valid.add(signature(info, lab))

bits = sorted(valid)
print(f"// {len(bits)} valid signatures")
for i in range(0, len(bits), 12):
    print('    ' + ', '.join(f'0x{b:03x}' for b in bits[i:i+12]) + ',')
