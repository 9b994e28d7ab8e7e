from __future__ import annotations

from hypothesis import strategies as st

from pmtools.core import Polymatroid


@st.composite
def polymatroids(draw, max_n: int = 5, max_singleton: int | None = None):
    """Sums of coverage functions and truncated weight functions, which are
    always polymatroids."""
    n = draw(st.integers(0, max_n))
    universe = draw(st.integers(1, 5))
    covers = [draw(st.integers(0, (1 << universe) - 1)) for _ in range(n)]
    weights = [draw(st.integers(0, 2)) for _ in range(n)]
    cap = draw(st.integers(0, 4))

    def f(X: int) -> int:
        u = 0
        w = 0
        for i in range(n):
            if X >> i & 1:
                u |= covers[i]
                w += weights[i]
        return u.bit_count() + min(w, cap)

    p = Polymatroid.from_function(n, f)
    if max_singleton is not None and p.max_singleton > max_singleton:
        # truncation keeps submodularity
        p = Polymatroid.from_function(n, lambda X: min(p.rank[X], max_singleton))
    return p
