import sys
from pathlib import Path

from hypothesis import strategies as st

from detlinks.grass_ring import GrassClass, GrassSpec
from detlinks.partitions import partitions_in_box

sys.path.insert(0, str(Path(__file__).parent))


def partition_tuples(max_part=8, max_len=6):
    """Arbitrary small partitions."""
    return st.lists(
        st.integers(min_value=1, max_value=max_part), max_size=max_len
    ).map(lambda parts: tuple(sorted(parts, reverse=True)))


@st.composite
def spec_with_classes(draw, count=2, max_m=6, max_coeff=4):
    """A Grassmannian spec plus ``count`` random homogeneous classes on it."""
    m = draw(st.integers(min_value=1, max_value=max_m))
    r = draw(st.integers(min_value=0, max_value=m))
    spec = GrassSpec(r, m)
    classes = []
    for _ in range(count):
        deg = draw(st.integers(min_value=0, max_value=spec.dim))
        basis = partitions_in_box(spec.r, spec.cols, deg)
        coeffs = draw(
            st.lists(
                st.integers(min_value=-max_coeff, max_value=max_coeff),
                min_size=len(basis),
                max_size=len(basis),
            )
        )
        classes.append(GrassClass(spec, dict(zip(basis, coeffs))))
    return spec, classes
