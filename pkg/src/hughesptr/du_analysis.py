"""Uniformity, difference operators, and differential uniformity over GF(Q).

Everything is computed from value tables (vectors indexed by canonical
element index), never symbolically: at these field sizes the exhaustive
O(Q^2) sweep is immediate and immune to algebra slips.

For the ternary operation of the Hughes plane the section families behave
as follows, and ``du_sections`` re-derives it by enumeration:

* X-sections T(X, y, z): differential uniformity Q when y is in the
  subfield (the section is linear), (Q+3)/4 otherwise.
* Y- and Z-sections: always Q, because the non-linear part factors through
  V -> V^q - V, which kills every direction in the subfield.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gf_tower import FieldCtx, FieldElement, field_ctx

__all__ = [
    "DuProfile",
    "function_table",
    "uniformity",
    "diff_op",
    "du",
    "du_sections",
    "piecewise_section",
    "k_sets",
    "square_shift_partition",
    "linearized_table",
    "is_permutation",
]


@dataclass
class DuProfile:
    """delta, a direction achieving it, and per-direction fiber maxima."""

    delta: int
    max_direction: FieldElement
    row_max: dict[int, int]  # direction index -> u(difference map)


def function_table(ctx: FieldCtx, f) -> np.ndarray:
    """Normalize a function on GF(Q) to a value-index vector.

    Accepts a callable on FieldElements, a numpy index array, or a sequence
    of indices.
    """
    if callable(f):
        return np.array([f(x).index for x in ctx.enumerate_field()], dtype=np.int32)
    arr = np.asarray(f, dtype=np.int32)
    if arr.shape != (ctx.Q,):
        raise ValueError(f"expected a table of length {ctx.Q}")
    return arr


def uniformity(ctx: FieldCtx, f) -> int:
    """Largest fiber size max_b #{x : f(x) = b}."""
    tbl = function_table(ctx, f)
    return int(np.bincount(tbl, minlength=ctx.Q).max())


def diff_op(ctx: FieldCtx, f, a: FieldElement):
    """The difference map x -> f(x+a) - f(x) for a nonzero direction a."""
    if a.index == 0:
        raise ValueError("direction must be nonzero")
    tbl = function_table(ctx, f)

    def delta(x: FieldElement) -> FieldElement:
        shifted = int(tbl[ctx._add_i(x.index, a.index)])
        return ctx.element_from_index(shifted) - ctx.element_from_index(int(tbl[x.index]))

    return delta


def _row_maxima(t, tbl: np.ndarray) -> np.ndarray:
    """u(difference map) for every nonzero direction, as a (Q-1,) vector."""
    Q = len(tbl)
    ar = np.arange(Q, dtype=np.int32)
    xpa = t.add(ar[1:, None], ar[None, :])          # [a-1, x] -> x + a
    diffs = t.sub(tbl[xpa], tbl[None, :])
    offs = diffs + (np.arange(Q - 1, dtype=np.int64) * Q)[:, None]
    counts = np.bincount(offs.ravel(), minlength=(Q - 1) * Q)
    return counts.reshape(Q - 1, Q).max(axis=1)


def du(ctx: FieldCtx, f) -> DuProfile:
    """Full differential-uniformity profile by exhaustive enumeration."""
    tbl = function_table(ctx, f)
    um = _row_maxima(ctx.tables, tbl)
    delta = int(um.max())
    direction = int(np.argmax(um)) + 1
    return DuProfile(
        delta=delta,
        max_direction=ctx.element_from_index(direction),
        row_max={a + 1: int(u) for a, u in enumerate(um)},
    )


# ---------------------------------------------------------------------------
# Section sweeps
# ---------------------------------------------------------------------------


def _expected_x_delta(ctx: FieldCtx, y_index: int) -> int:
    return ctx.Q if y_index < ctx.q else (ctx.Q + 3) // 4


def piecewise_section(ctx: FieldCtx, family: str, i1: int, i2: int) -> np.ndarray:
    """One section of the built-in piecewise operation as a value vector.

    Computed directly in O(Q), so section sweeps never materialize the full
    Q^3 grid; exhaustively consistent with the grid itself (tested).
    """
    t = ctx.tables
    q = ctx.q
    ar = np.arange(ctx.Q, dtype=np.int32)
    if family == "x":
        y, z = i1, i2
        same = t.add(t.mul(ar, np.int32(y)), np.int32(z))
        if y < q:
            return same.astype(np.int32)
        twisted = t.add(t.mul(ar, np.int32(int(t.frob[y]))), np.int32(int(t.frob[z])))
        k = ctx._mul_i(int(t.tq[z]), ctx._inv_i(int(t.tq[y])))
        branch = t.quad[t.add(ar, np.int32(k))] >= 0
        return np.where(branch, same, twisted).astype(np.int32)
    if family == "y":
        x, z = i1, i2
        same = t.add(t.mul(np.int32(x), ar), np.int32(z))
        twisted = t.add(t.mul(np.int32(x), t.frob), np.int32(int(t.frob[z])))
        k = t.mul(np.int32(int(t.tq[z])), t.inv[t.tq])  # junk on subfield rows
        branch = t.quad[t.add(np.int32(x), k)] >= 0
        return np.where(t.in_subfield | branch, same, twisted).astype(np.int32)
    if family == "z":
        x, y = i1, i2
        same = t.add(np.int32(ctx._mul_i(x, y)), ar)
        if y < q:
            return same.astype(np.int32)
        twisted = t.add(np.int32(ctx._mul_i(x, int(t.frob[y]))), t.frob)
        k = t.mul(t.tq, np.int32(ctx._inv_i(int(t.tq[y]))))
        branch = t.quad[t.add(np.int32(x), k)] >= 0
        return np.where(branch, same, twisted).astype(np.int32)
    raise ValueError(f"unknown section family {family!r}")


def _section_deltas(ctx: FieldCtx, family: str, fixings: list[tuple[int, int]],
                    table: np.ndarray | None) -> list[int]:
    t = ctx.tables
    out = []
    for i1, i2 in fixings:
        if table is None:
            f = piecewise_section(ctx, family, i1, i2)
        elif family == "x":
            f = table[:, i1, i2]
        elif family == "y":
            f = table[i1, :, i2]
        else:
            f = table[i1, i2, :]
        out.append(int(_row_maxima(t, f).max()))
    return out


def _worker_deltas(args) -> list[int]:
    # module-level for pickling; rebuilds the shared context per process
    p, e, family, fixings = args
    return _section_deltas(field_ctx(p, e), family, fixings, None)


def du_sections(ctx: FieldCtx, source=None, *,
                families: str = "xyz", sample: int | None = None,
                seed: int = 0, workers: int = 1) -> dict:
    """Differential uniformity of the three section families of a ternary
    operation, with expected values for the Hughes operation.

    ``source`` may be a (Q,Q,Q) value table, a ternary callable on field
    elements, or None for the built-in piecewise operation, whose sections
    are then generated lazily in O(Q) each (no full grid).  ``sample``
    limits each family to that many fixings (seeded, uniform without
    replacement); by default the sweep is exhaustive.  ``workers`` shards
    the fixing list across processes and requires ``source=None``; the
    output is identical for every worker count.
    """
    if workers > 1 and source is not None:
        raise ValueError("parallel sweeps support only the built-in operation (source=None)")
    if source is None:
        table = None  # sections of the piecewise operation are computed lazily
    elif callable(source):
        els = ctx.enumerate_field()
        table = np.empty((ctx.Q, ctx.Q, ctx.Q), dtype=np.int32)
        for ix, x in enumerate(els):
            for iy, y in enumerate(els):
                table[ix, iy] = [source(x, y, z).index for z in els]
    else:
        table = np.asarray(source, dtype=np.int32)
    Q = ctx.Q

    report: dict = {}
    for family in families:
        fixings = [(i1, i2) for i1 in range(Q) for i2 in range(Q)]
        if sample is not None and sample < len(fixings):
            rng = np.random.default_rng(seed)
            chosen = rng.choice(len(fixings), size=sample, replace=False)
            fixings = [fixings[i] for i in sorted(chosen)]

        if workers > 1:
            chunks = [fixings[i::workers] for i in range(workers)]
            order = [i for w in range(workers) for i in range(w, len(fixings), workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_worker_deltas,
                                      [(ctx.p, ctx.e, family, ch) for ch in chunks]))
            flat = [d for part in parts for d in part]
            deltas = [0] * len(fixings)
            for pos, d in zip(order, flat):
                deltas[pos] = d
        else:
            deltas = _section_deltas(ctx, family, fixings, table)

        if family == "x":
            expected = [_expected_x_delta(ctx, y) for y, _ in fixings]
        else:
            expected = [Q] * len(fixings)
        report[family] = {
            "fixings": fixings,
            "deltas": deltas,
            "expected": expected,
            "passed": deltas == expected,
        }
    return report


# ---------------------------------------------------------------------------
# Square shift-pair counts
# ---------------------------------------------------------------------------


def k_sets(ctx: FieldCtx, a: FieldElement) -> tuple[int, int]:
    """(#{x : x, x+a both squares}, #{x : x, x+a both non-squares}).

    Squares include zero here; that is the convention under which the
    square/square count for square a equals (Q+3)/4, the X-section
    differential uniformity.
    """
    if a.index == 0:
        raise ValueError("shift must be nonzero")
    t = ctx.tables
    ar = np.arange(ctx.Q, dtype=np.int32)
    xa = t.add(ar, np.int32(a.index))
    sq = t.quad >= 0
    nsq = t.quad == -1
    k1 = int(np.count_nonzero(sq & sq[xa]))
    k4 = int(np.count_nonzero(nsq & nsq[xa]))
    return k1, k4


def square_shift_partition(ctx: FieldCtx, a: FieldElement) -> dict[str, int]:
    """Strict partition of GF(Q) by the character signs of (x, x+a).

    Boundary points (x = 0 and x = -a, where the character vanishes) form
    their own class, so the five counts sum to Q.
    """
    if a.index == 0:
        raise ValueError("shift must be nonzero")
    t = ctx.tables
    ar = np.arange(ctx.Q, dtype=np.int32)
    xa = t.add(ar, np.int32(a.index))
    s0, s1 = t.quad, t.quad[xa]
    return {
        "square_square": int(np.count_nonzero((s0 == 1) & (s1 == 1))),
        "square_nonsquare": int(np.count_nonzero((s0 == 1) & (s1 == -1))),
        "nonsquare_square": int(np.count_nonzero((s0 == -1) & (s1 == 1))),
        "nonsquare_nonsquare": int(np.count_nonzero((s0 == -1) & (s1 == -1))),
        "boundary": int(np.count_nonzero((s0 == 0) | (s1 == 0))),
    }


# ---------------------------------------------------------------------------
# Linearized-polynomial helpers (used by the invariance tests)
# ---------------------------------------------------------------------------


def linearized_table(ctx: FieldCtx, coeffs: list[FieldElement]) -> np.ndarray:
    """Value table of sum_i c_i * x^(p^i) for the given coefficient list."""
    t = ctx.tables
    ar = np.arange(ctx.Q, dtype=np.int32)
    acc = np.zeros(ctx.Q, dtype=np.int32)
    for i, c in enumerate(coeffs):
        acc = t.add(acc, t.mul(np.int32(c.index), t.pow(ar, ctx.p**i)))
    return acc


def is_permutation(table: np.ndarray) -> bool:
    return bool((np.sort(np.asarray(table)) == np.arange(len(table))).all())
