from app.chains.complexes import ChainComplex, homology
from app.chains.groups import PresentedGroup
from app.derive.modules import FpModule
from app.dto.FgAbGroup import FgAbGroup


def tor_oracle(m: FpModule, a: FgAbGroup, n: int) -> FgAbGroup:
    """
    Tor_n(m, A) from the canonical two-term free resolution of m:
    0 -> ℤ^r --R--> ℤ^g -> m, with R injective. Zero above degree 1.
    """
    if n >= 2:
        return FgAbGroup.zero()
    canonical = PresentedGroup.from_fg(m.canonical())
    relations = canonical.relations
    complex_ = ChainComplex.free([relations.rows, relations.cols], [relations]).tensor(a)
    return homology(complex_, n)
