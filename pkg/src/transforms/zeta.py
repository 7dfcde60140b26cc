"""
Trimmed fast zeta transforms on the subset lattice.

Up-zeta:   f_up(Y)   = sum of f(X) over X in F with Y subset of X
Down-zeta: f_down(Y) = sum of f(X) over X in F with X subset of Y

Both are computed with Yates-style sweeps over element i = 0..n-1, in place
over a working vector indexed by a closed family. Sets missing from the
family read as zero. Four variants are provided, distinguished by which
family the sweep runs over:

    1  up-zeta on G,   via complements,             O(n (|F| + |up(G)|))
    2  up-zeta on G,   sweep over down(F),          O(n (|down(F)| + |G|))
    3  down-zeta on G, sweep over down(G),          O(n (|F| + |down(G)|))
    4  down-zeta on G, via complements,             O(n (|up(F)| + |G|))
"""

import logging
from typing import Any, Optional, Sequence

from ..errors import ArgumentError
from ..models.circuit import Circuit
from ..models.set_family import SetFamily
from ..models.tables import IndexedFunction
from ..utils.circuit_builder import ArithmeticBuilder, CircuitBuilder, DirectBuilder, plus
from ..utils.lattice import common_ground_set, complement_family, down_closure
from ..utils.rings import RingOps

logger = logging.getLogger(__name__)

ZETA_VARIANTS = (1, 2, 3, 4)


def up_zeta_on_downclosure(builder: ArithmeticBuilder, f: IndexedFunction,
                           closure: Optional[SetFamily] = None) -> IndexedFunction:
    """
    Up-zeta transform of f evaluated on every set of down(F).

    All nonzero values of the up-zeta transform lie in down(F), so this is
    the whole transform. Sweep: g_i(Y) = g_{i-1}(Y) + g_{i-1}(Y | {i}) for
    Y without i.

    Args:
        builder: Circuit or streaming builder
        f: Handles over F (None is zero)
        closure: Precomputed down(F), if the caller has it

    Returns:
        Handles over down(F)
    """
    D = closure if closure is not None else down_closure(f.domain)
    index = D.index
    work: list = [None] * len(D)
    for mask, value in f.items():
        work[index[mask]] = value

    masks = D.masks
    for i in range(D.n):
        bit = 1 << i
        for pos, mask in enumerate(masks):
            if mask & bit:
                continue
            other = index.get(mask | bit)
            if other is not None and work[other] is not None:
                work[pos] = plus(builder, work[pos], work[other])

    return IndexedFunction(D, work)


def down_zeta_on_targets(builder: ArithmeticBuilder, f: IndexedFunction, G: SetFamily,
                         closure: Optional[SetFamily] = None) -> IndexedFunction:
    """
    Down-zeta transform of f evaluated on G.

    Restricts f to F intersected with down(G), then sweeps
    h_i(Y) = h_{i-1}(Y) + h_{i-1}(Y \\ {i}) for Y containing i, over the
    down-closed family down(G), and reads off the values at G.

    Args:
        builder: Circuit or streaming builder
        f: Handles over F (None is zero)
        G: Target family
        closure: Precomputed down(G), if the caller has it

    Returns:
        Handles over G
    """
    D = closure if closure is not None else down_closure(G)
    index = D.index
    work: list = [None] * len(D)
    for mask, value in f.items():
        pos = index.get(mask)
        if pos is not None:
            work[pos] = value

    masks = D.masks
    for i in range(D.n):
        bit = 1 << i
        for pos, mask in enumerate(masks):
            if not mask & bit:
                continue
            # down-closed, so the smaller set is always present
            other = index[mask ^ bit]
            if work[other] is not None:
                work[pos] = plus(builder, work[pos], work[other])

    return IndexedFunction(G, [work[index[mask]] for mask in G])


def _complement_function(f: IndexedFunction, n: int) -> IndexedFunction:
    full = (1 << n) - 1
    comp = complement_family(f.domain, n)
    by_mask = f.as_dict()
    return IndexedFunction(comp, [by_mask[full ^ mask] for mask in comp])


def _rebase(f: IndexedFunction, n: int) -> IndexedFunction:
    if f.domain.n == n:
        return f
    return IndexedFunction(f.domain.with_ground_set(n), list(f.values))


def _read_off(values: IndexedFunction, G: SetFamily, full: int = 0) -> IndexedFunction:
    """Values at G (optionally at complements of G), zero where absent."""
    return IndexedFunction(G, [values.value_at(full ^ mask) for mask in G])


def zeta_by_complement(kind: int, builder: ArithmeticBuilder, f: IndexedFunction,
                       G: SetFamily, n: Optional[int] = None) -> IndexedFunction:
    """
    Zeta transform on G computed through complementation.

    X -> U \\ X swaps subset and superset and exchanges down- and
    up-closures. Kind 4 (down-zeta on G) becomes an up-zeta sweep over
    down(complement F), that is over up(F). Kind 2 (up-zeta on G) becomes
    a down-zeta sweep over down(complement G), that is over up(G).

    Args:
        kind: 2 for up-zeta, 4 for down-zeta
        builder: Circuit or streaming builder
        f: Handles over F
        G: Target family
        n: Ground set size shared by F and G

    Returns:
        Handles over G

    Raises:
        ArgumentError: If kind is not 2 or 4
    """
    n = common_ground_set(f.domain, G, n=n)
    full = (1 << n) - 1
    comp_f = _complement_function(_rebase(f, n), n)
    comp_g = complement_family(G, n)

    if kind == 4:
        swept = up_zeta_on_downclosure(builder, comp_f)
        return _read_off(swept, G.with_ground_set(n), full)
    if kind == 2:
        on_comp = down_zeta_on_targets(builder, comp_f, comp_g)
        return _read_off(on_comp, G.with_ground_set(n), full)
    raise ArgumentError(f"Complement route is defined for variants 2 and 4, not {kind}")


def trimmed_zeta(kind: int, builder: ArithmeticBuilder, f: IndexedFunction,
                 G: SetFamily, n: Optional[int] = None) -> IndexedFunction:
    """
    One of the four trimmed zeta variants, evaluated on G.

    Args:
        kind: Variant 1..4 (see module docstring)
        builder: Circuit or streaming builder
        f: Handles over F
        G: Target family
        n: Ground set size shared by F and G

    Returns:
        Handles over G

    Raises:
        ArgumentError: If kind is not 1..4
    """
    n = common_ground_set(f.domain, G, n=n)
    f = _rebase(f, n)
    G = G.with_ground_set(n)

    if kind == 1:
        # up-zeta on G = down-zeta of the complements, swept over down(complement G) = up(G)
        return zeta_by_complement(2, builder, f, G, n)
    if kind == 2:
        swept = up_zeta_on_downclosure(builder, f)
        return _read_off(swept, G)
    if kind == 3:
        return down_zeta_on_targets(builder, f, G)
    if kind == 4:
        return zeta_by_complement(4, builder, f, G, n)
    raise ArgumentError(f"Unknown zeta variant {kind}; expected one of {ZETA_VARIANTS}")


def zeta_transform(kind: int, F: SetFamily, values: Sequence[Any], G: SetFamily,
                   ring: RingOps, n: Optional[int] = None) -> IndexedFunction:
    """
    Evaluate a trimmed zeta variant directly in a ring.

    Returns:
        Ring elements over G (zeros included)
    """
    builder = DirectBuilder(ring, values)
    f = IndexedFunction(F, [builder.input(slot) for slot in range(len(F))])
    out = trimmed_zeta(kind, builder, f, G, n)
    zero = ring.zero()
    return IndexedFunction(out.domain, [zero if v is None else v for v in out.values])


def build_zeta_circuit(kind: int, F: SetFamily, G: SetFamily, n: Optional[int] = None) -> Circuit:
    """
    Circuit with one input per member of F and one output per member of G.

    Output labels are the target masks.
    """
    builder = CircuitBuilder(len(F))
    f = IndexedFunction(F, [builder.input(slot) for slot in range(len(F))])
    out = trimmed_zeta(kind, builder, f, G, n)
    for mask, handle in out.items():
        builder.output(mask, handle)
    logger.debug("zeta variant %d: |F|=%d |G|=%d -> %s", kind, len(F), len(G), builder.stats())
    return builder.build()
