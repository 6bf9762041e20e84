"""Independent reference implementations used to check the library.

None of these share code with ``ringgroups``; each decides the same question
by a different route (Artin's free-group action for braids, physical state
simulation for the quotients, concrete matrices for group orders, dense
sampling for geometry).
"""

import itertools

import numpy as np


# ---------------------------------------------------------------- braids

def _free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _subst(images, w):
    out = []
    for x in w:
        img = images[abs(x) - 1]
        out.extend(img if x > 0 else [-y for y in reversed(img)])
    return _free_reduce(out)


def _artin_letter(m, i, e):
    imgs = [(k,) for k in range(1, m + 1)]
    if e == 1:
        imgs[i - 1] = (i, i + 1, -i)
        imgs[i] = (i,)
    else:
        imgs[i - 1] = (i + 1,)
        imgs[i] = (-(i + 1), i, i + 1)
    return imgs


def artin_images(m, letters):
    """Images of x_1..x_m under the Artin action of a braid word."""
    imgs = [(k,) for k in range(1, m + 1)]
    for i, e in letters:
        step = _artin_letter(m, i, e)
        imgs = [_subst(step, img) for img in imgs]
    return imgs


def artin_trivial(m, letters):
    """Artin's representation is faithful, so this decides braid triviality."""
    return artin_images(m, letters) == [(k,) for k in range(1, m + 1)]


def strand_perm(m, letters):
    """where[k-1] = final position of the strand starting at k."""
    pos = list(range(1, m + 1))
    for i, _ in letters:
        for k in range(m):
            if pos[k] == i:
                pos[k] = i + 1
            elif pos[k] == i + 1:
                pos[k] = i
    return tuple(pos)


# ---------------------------------------------------------------- quotients

def ring_state(n, letters):
    """Push rings around: returns (label at each position, twist of each label)."""
    at = list(range(1, n + 1))
    twist = [0] * n
    for x in letters:
        if x.kind in ("rho", "sigma"):
            i = x.index
            at[i - 1], at[i] = at[i], at[i - 1]
        elif x.kind == "tau":
            twist[at[x.index - 1] - 1] += x.exponent
    return tuple(at), tuple(twist)


def ring_state_trivial(n, letters, modulus=None):
    at, twist = ring_state(n, letters)
    if modulus:
        twist = tuple(t % modulus for t in twist)
    return at == tuple(range(1, n + 1)) and not any(twist)


def signed_perm_matrix(n, x):
    m = np.eye(n, dtype=np.int64)
    if x.kind in ("rho", "sigma"):
        i = x.index - 1
        m[[i, i + 1]] = m[[i + 1, i]]
    elif x.kind == "tau":
        m[x.index - 1, x.index - 1] = -1
    return m


def matrix_group_order(gens):
    """Order of the finite matrix group generated by ``gens`` (BFS closure)."""
    ident = np.eye(gens[0].shape[0], dtype=np.int64)
    seen = {ident.tobytes()}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                key = b.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(b)
        frontier = nxt
    return len(seen)


def word_matrix(n, letters, gen_matrix):
    m = np.eye(n, dtype=np.int64)
    for x in letters:
        g = gen_matrix(n, x)
        m = m @ (g if x.exponent == 1 else np.linalg.inv(g).round().astype(np.int64))
    return m


def symmetric_group(n):
    return list(itertools.permutations(range(n)))


def transposition_matrix(n, x):
    m = np.eye(n, dtype=np.int64)
    i = x.index - 1
    m[[i, i + 1]] = m[[i + 1, i]]
    return m


# ---------------------------------------------------------------- geometry

def _frame(normal):
    n = np.asarray(normal, float)
    ref = np.array([1.0, 0, 0]) if abs(n[0]) < 0.9 else np.array([0, 1.0, 0])
    u = np.cross(n, ref)
    u /= np.linalg.norm(u)
    return u, np.cross(n, u)


def sample_circle(center, radius, normal, count):
    u, v = _frame(normal)
    th = np.linspace(0, 2 * np.pi, count, endpoint=False)
    return np.asarray(center, float) + radius * (np.outer(np.cos(th), u) + np.outer(np.sin(th), v))


def sampled_crossings(c1, c2, samples=10_000):
    """Times the polygon through ``samples`` points of c1 pierces the open disk of c2."""
    pts = sample_circle(c1.center, c1.radius, c1.normal, samples)
    nxt = np.roll(pts, -1, axis=0)
    n = np.asarray(c2.normal, float)
    ctr = np.asarray(c2.center, float)
    h0 = (pts - ctr) @ n
    h1 = (nxt - ctr) @ n
    cross = np.sign(h0) * np.sign(h1) < 0
    t = h0[cross] / (h0[cross] - h1[cross])
    hit = pts[cross] + t[:, None] * (nxt[cross] - pts[cross])
    inside = np.linalg.norm(hit - ctr, axis=1) < c2.radius
    return int(inside.sum())


def sampled_disk_min_distance(point, circle, rings=400, spokes=720):
    """Minimum distance from ``point`` to a dense sample of the flat disk."""
    u, v = _frame(circle.normal)
    rs = np.linspace(0, circle.radius, rings)
    th = np.linspace(0, 2 * np.pi, spokes, endpoint=False)
    dirs = np.outer(np.cos(th), u) + np.outer(np.sin(th), v)
    pts = np.asarray(circle.center, float) + (rs[:, None, None] * dirs[None]).reshape(-1, 3)
    return float(np.linalg.norm(pts - np.asarray(point, float), axis=1).min())


def sampled_disks_meet(c1, c2, tol=1e-3, rings=120, spokes=360):
    """Some sample of disk 1 lies within ``tol`` of disk 2."""
    u, v = _frame(c1.normal)
    rs = np.linspace(0, c1.radius, rings)
    th = np.linspace(0, 2 * np.pi, spokes, endpoint=False)
    dirs = np.outer(np.cos(th), u) + np.outer(np.sin(th), v)
    pts = np.asarray(c1.center, float) + (rs[:, None, None] * dirs[None]).reshape(-1, 3)
    n = np.asarray(c2.normal, float)
    rel = pts - np.asarray(c2.center, float)
    h = rel @ n
    radial = np.linalg.norm(rel - h[:, None] * n, axis=1)
    d = np.sqrt(h ** 2 + np.maximum(radial - c2.radius, 0) ** 2)
    return bool(d.min() <= tol)


def random_unit(rng):
    while True:
        v = np.array([rng.gauss(0, 1) for _ in range(3)])
        k = np.linalg.norm(v)
        if k > 1e-3:
            return tuple(v / k)


def random_circle(rng, box=3.0, rmin=0.3, rmax=2.0):
    from ringgroups.geometry import Circle
    center = tuple(rng.uniform(-box, box) for _ in range(3))
    return Circle(center, rng.uniform(rmin, rmax), random_unit(rng))


def _near(rng, base):
    """A smaller circle centered close to the disk of ``base``."""
    from ringgroups.geometry import Circle
    r = float(base.radius)
    center = tuple(x + rng.uniform(-r, r) for x in base.center)
    return Circle(center, rng.uniform(0.2, 0.8) * r, random_unit(rng))


def random_config(rng, size, box=4.0, tries=2000, generic=True, tangle=0.0):
    """Rejection-sample a validated (and by default generic) configuration.

    With probability ``tangle`` each new circle is placed near the disk of
    an earlier one, which often gives unlinked pairs with overlapping disks.
    """
    from ringgroups.geometry import GeometryError, RingConfig, check_generic, validate
    for _ in range(tries):
        circles = []
        for _ in range(size):
            for _ in range(200):
                if circles and rng.random() < tangle:
                    c = _near(rng, rng.choice(circles))
                else:
                    c = random_circle(rng, box)
                try:
                    validate(circles + [c])
                except GeometryError:
                    continue
                circles.append(c)
                break
        if len(circles) < size:
            continue
        cfg = validate(RingConfig(tuple(circles)))
        if generic:
            try:
                check_generic(cfg, tol=1e-3)
            except GeometryError:
                continue
        return cfg
    raise RuntimeError("could not sample a configuration")
