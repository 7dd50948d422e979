from hypothesis import strategies as st

from lrpictures import Cell, Partition, SkewShape

cells = st.builds(Cell, st.integers(1, 8), st.integers(1, 8))


@st.composite
def partitions(draw, max_rows=4, max_part=5):
    rows = draw(st.integers(0, max_rows))
    parts = sorted(
        (draw(st.integers(0, max_part)) for _ in range(rows)), reverse=True
    )
    return Partition(tuple(parts))


@st.composite
def skew_shapes(draw, max_rows=4, max_part=5):
    outer = draw(partitions(max_rows, max_part))
    inner_parts = []
    prev = max_part
    for i in range(1, outer.rows + 1):
        v = draw(st.integers(0, min(prev, outer.part(i))))
        inner_parts.append(v)
        prev = v
    return SkewShape(outer, Partition(tuple(inner_parts)))


letters = st.integers(1, 5)
words = st.lists(letters, max_size=8).map(tuple)
