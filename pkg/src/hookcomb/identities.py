"""Named verification checks for the perimeter-graded partition theorems.

Each check sweeps a parameter range, compares independently computed
quantities, and returns a :class:`TheoremReport`: pass, or fail with the
smallest counterexample found (ranges are scanned in increasing order, so
the first discrepancy is the minimal one).  Checks never raise on a
mathematical mismatch, only on invalid parameters.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .counting import (
    LargestPart,
    NumParts,
    Rank,
    binom,
    count_by_perimeter,
    count_parity_split,
    count_refined,
    excess_e,
    fibonacci,
    partitions_of_size,
    parts_by_perimeter,
)
from .partitions import (
    ConstraintClass,
    DISTINCT,
    ODD,
    Partition,
    UNRESTRICTED,
    d_distinct,
    g_class,
    mod_one,
    parts_are_member,
)
from .profile import BLOCK_I, BLOCK_II, BlockDecomposition, MiddleBlock, blocks_to_partition
from .series import MultiPoly, RationalGF, expand, gf_of_class, pochhammer, poly_gens, series_inverse


class NotDistinct(ValueError):
    pass


class InvalidD(ValueError):
    pass


@dataclass
class TheoremReport:
    """Outcome of one verification run.

    ``status`` is "pass" or "fail"; a counterexample (inputs plus the
    conflicting values) is present exactly when the status is "fail".
    Serialized reports are stable across runs apart from ``elapsed_ms``.
    """

    check_id: str
    params: dict
    status: str
    counterexample: dict | None = None
    elapsed_ms: float = 0.0

    def __post_init__(self) -> None:
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("fail status and counterexample must appear together")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        out = {"check_id": self.check_id, "params": self.params, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out["elapsed_ms"] = self.elapsed_ms
        return out


def _finish(check_id: str, params: dict, counterexample: dict | None, t0: float) -> TheoremReport:
    return TheoremReport(
        check_id=check_id,
        params=params,
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )


# ---------------------------------------------------------------------------
# Franklin's involution


def franklin(p: Partition) -> Partition | None:
    """Apply the classical sign-reversing involution on distinct-part
    partitions; return the paired partition, or None on a fixed point.

    With s the smallest part and r the length of the maximal initial run
    pi_1, pi_1 - 1, ...: if s <= r, delete the smallest part and add 1 to
    each of the s largest parts; if s > r, subtract 1 from each of the r
    largest parts and append a new part r.  When the run reaches the last
    part and s is r or r + 1, neither move is legal: fixed point.  A move
    keeps the size and the perimeter and flips the length parity.
    """
    parts = p.parts
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise NotDistinct(f"{p!r} does not have distinct parts")
    s = parts[-1]
    r = 1
    while r < len(parts) and parts[r] == parts[r - 1] - 1:
        r += 1
    if r == len(parts) and s in (r, r + 1):
        return None
    if s <= r:
        new = list(parts[:-1])
        for i in range(s):
            new[i] += 1
    else:
        new = list(parts)
        for i in range(r):
            new[i] -= 1
        new.append(r)
    return Partition(tuple(new))


def _generalized_pentagonals(limit: int) -> list[tuple[int, int, int]]:
    """(size, k, expected largest-part-plus-length) for sizes <= limit."""
    out = []
    k = 1
    while True:
        a = k * (3 * k - 1) // 2
        b = k * (3 * k + 1) // 2
        if a > limit:
            break
        out.append((a, k, 3 * k - 1))
        if b <= limit:
            out.append((b, k, 3 * k))
        k += 1
    return sorted(out)


def verify_franklin(max_size: int = 40) -> TheoremReport:
    """Involution, parity flip, size and perimeter preservation on all
    distinct-part partitions of size <= max_size; fixed points sit exactly
    at the generalized pentagonal sizes, one each, with the staircase shape
    the surviving series terms predict."""
    t0 = time.perf_counter()
    params = {"max_size": max_size}
    fixed: list[Partition] = []
    for n in range(1, max_size + 1):
        for parts in partitions_of_size(n, distinct=True):
            p = Partition(parts)
            image = franklin(p)
            if image is None:
                fixed.append(p)
                continue
            bad = None
            if image.size != p.size:
                bad = {"reason": "size changed", "got": image.size}
            elif image.perimeter != p.perimeter:
                bad = {"reason": "perimeter changed", "got": image.perimeter}
            elif (image.length - p.length) % 2 != 1:
                bad = {"reason": "length parity not flipped", "got": image.length}
            elif franklin(image) != p:
                bad = {"reason": "not an involution", "got": list((franklin(image) or image).parts)}
            if bad:
                bad.update({"partition": list(parts), "image": list(image.parts)})
                return _finish("franklin", params, bad, t0)
    expected = _generalized_pentagonals(max_size)
    got_sizes = sorted(f.size for f in fixed)
    if got_sizes != [e[0] for e in expected]:
        ce = {"reason": "fixed-point sizes", "expected": [e[0] for e in expected], "got": got_sizes}
        return _finish("franklin", params, ce, t0)
    by_size = {f.size: f for f in fixed}
    for size, k, y_exp in expected:
        f = by_size[size]
        if f.parts[0] + f.length != y_exp or f.perimeter != y_exp - 1 or f.length != k:
            ce = {
                "reason": "fixed-point shape",
                "size": size,
                "partition": list(f.parts),
                "expected_y_exponent": y_exp,
                "expected_length": k,
            }
            return _finish("franklin", params, ce, t0)
    return _finish("franklin", params, None, t0)


# ---------------------------------------------------------------------------
# Counting theorems


def verify_euler_analogue(max_n: int = 25, enum_limit: int = 16) -> TheoremReport:
    """Distinct-part and odd-part partitions with perimeter n are
    equinumerous, counted by the Fibonacci number F(n): enumeration up to
    enum_limit, the generic gap recurrence up to max_n."""
    t0 = time.perf_counter()
    params = {"max_n": max_n, "enum_limit": enum_limit}
    for n in range(1, max_n + 1):
        fib = fibonacci(n)
        routes = {
            "recurrence ddistinct(1)": count_by_perimeter(n, d_distinct(1)),
            "recurrence modone(1)": count_by_perimeter(n, mod_one(1)),
        }
        if n <= enum_limit:
            all_parts = parts_by_perimeter(n)
            routes["enumeration distinct"] = sum(1 for parts in all_parts if parts_are_member(parts, DISTINCT))
            routes["enumeration odd"] = sum(1 for parts in all_parts if parts_are_member(parts, ODD))
        for label, value in routes.items():
            if value != fib:
                ce = {"n": n, "route": label, "got": value, "fibonacci": fib}
                return _finish("euler-analogue", params, ce, t0)
    return _finish("euler-analogue", params, None, t0)


def verify_powers_of_two(max_n: int = 16) -> TheoremReport:
    """There are 2^(n-1) partitions with perimeter n, by exhaustive
    boundary-word enumeration."""
    t0 = time.perf_counter()
    params = {"max_n": max_n}
    for n in range(1, max_n + 1):
        got = len(parts_by_perimeter(n))
        closed = count_by_perimeter(n, UNRESTRICTED)
        if got != 1 << (n - 1) or closed != 1 << (n - 1):
            ce = {"n": n, "enumerated": got, "closed_form": closed, "expected": 1 << (n - 1)}
            return _finish("powers-of-two", params, ce, t0)
    return _finish("powers-of-two", params, None, t0)


def verify_refinements(max_n: int = 14) -> TheoremReport:
    """The three refined equinumerations between distinct-part and odd-part
    partitions of fixed perimeter, with their binomial counts."""
    t0 = time.perf_counter()
    params = {"max_n": max_n}
    for n in range(1, max_n + 1):
        all_parts = parts_by_perimeter(n)
        distinct = [p for p in all_parts if parts_are_member(p, DISTINCT)]
        odd = [p for p in all_parts if parts_are_member(p, ODD)]
        for k in range(0, n + 2):
            cases = [
                (
                    "length k distinct vs largest part 2k-1 odd",
                    sum(1 for p in distinct if len(p) == k),
                    sum(1 for p in odd if p[0] == 2 * k - 1),
                    binom(n - k, k - 1),
                    count_refined(n, NumParts(k), DISTINCT),
                ),
                (
                    "largest part k distinct vs largest+2*length = 2k+1 odd",
                    sum(1 for p in distinct if p[0] == k),
                    sum(1 for p in odd if p[0] + 2 * len(p) == 2 * k + 1),
                    binom(k - 1, n - k),
                    count_refined(n, LargestPart(k), DISTINCT),
                ),
                (
                    "rank k distinct vs length k+1 odd",
                    sum(1 for p in distinct if p[0] - len(p) == k),
                    sum(1 for p in odd if len(p) == k + 1),
                    binom((n + k - 1) // 2, k) if (n - 1 - k) % 2 == 0 else 0,
                    count_refined(n, Rank(k), DISTINCT),
                ),
            ]
            for label, lhs, rhs, closed, api in cases:
                if not (lhs == rhs == closed == api):
                    ce = {
                        "n": n,
                        "k": k,
                        "case": label,
                        "distinct_count": lhs,
                        "odd_count": rhs,
                        "binomial": closed,
                        "count_refined": api,
                    }
                    return _finish("refinements", params, ce, t0)
    return _finish("refinements", params, None, t0)


def verify_pentagonal_analogue(max_n: int = 30, enum_limit: int = 16) -> TheoremReport:
    """The even/odd-length excess over distinct-part partitions of fixed
    perimeter follows the period-6 pattern 0, -1, -1, 0, 1, 1; four
    computations (closed form, coupled recurrence, binomial sums,
    enumeration) and the series expansion of -q / (1 - q + q^2) agree."""
    t0 = time.perf_counter()
    params = {"max_n": max_n, "enum_limit": enum_limit}
    (q,) = poly_gens("q")
    one = MultiPoly.constant(1, ("q",))
    q2 = q * q
    series = expand(RationalGF(-q, one - q + q2), max_n)
    for n in range(1, max_n + 1):
        closed = excess_e(n)
        even, odd = count_parity_split(n)  # recurrence and binomials agree internally
        routes = {
            "parity_split": even - odd,
            "series": series.coefficient({"q": n}),
        }
        if n <= enum_limit:
            count = 0
            for parts in parts_by_perimeter(n):
                if parts_are_member(parts, DISTINCT):
                    count += 1 if len(parts) % 2 == 0 else -1
            routes["enumeration"] = count
        if n >= 4:
            routes["negated_shift"] = -excess_e(n - 3)
        for label, value in routes.items():
            if value != closed:
                ce = {"n": n, "route": label, "got": value, "closed_form": closed}
                return _finish("pentagonal-analogue", params, ce, t0)
    return _finish("pentagonal-analogue", params, None, t0)


def _block_sequences(budget: int, d: int, kind: str):
    """All alternating middle-block tuples consuming exactly ``budget``
    word letters, the next block having the given kind."""
    if budget == 0:
        yield ()
        return
    if budget < d + 1:
        return
    other = BLOCK_II if kind == BLOCK_I else BLOCK_I
    for j in range(budget - d):
        for rest in _block_sequences(budget - (d + 1) - j, d, other):
            yield (MiddleBlock(kind, j),) + rest


def gclass_by_block_grammar(n: int, d: int) -> set[tuple[int, ...]]:
    """Partitions of perimeter ``n`` in the gclass(``d``) family, generated
    from block sequences instead of by filtering."""
    out: set[tuple[int, ...]] = set()
    budget = n - 1  # word length n + 1, minus the initial E and terminal N
    for j0 in range(budget + 1):
        for middles in _block_sequences(budget - j0, d, BLOCK_I):
            p = blocks_to_partition(BlockDecomposition(j0, middles), d)
            out.add(p.parts)
    return out


def verify_d_chain(d: int, max_n: int = 18) -> TheoremReport:
    """For gap parameter d, the three families (parts differing by at least
    d; parts congruent to 1 mod d+1; the residue-and-gap class) are
    equinumerous at every perimeter, match the gap recurrence, and the
    residue-and-gap class is reproduced by block-grammar generation."""
    if d < 1:
        raise InvalidD("d must be a positive integer")
    t0 = time.perf_counter()
    params = {"d": d, "max_n": max_n}
    dd, mo, gc = d_distinct(d), mod_one(d), g_class(d)
    for n in range(1, max_n + 1):
        all_parts = parts_by_perimeter(n)
        h = sum(1 for p in all_parts if parts_are_member(p, dd))
        f = sum(1 for p in all_parts if parts_are_member(p, mo))
        g_set = {p for p in all_parts if parts_are_member(p, gc)}
        rec = count_by_perimeter(n, dd)
        grammar_set = gclass_by_block_grammar(n, d)
        if not (h == f == len(g_set) == rec) or grammar_set != g_set:
            ce = {
                "n": n,
                "d": d,
                "d_distinct": h,
                "mod_one": f,
                "g_class": len(g_set),
                "recurrence": rec,
                "block_grammar": len(grammar_set),
            }
            if grammar_set != g_set:
                diff = sorted(grammar_set ^ g_set)[:3]
                ce["set_difference_sample"] = [list(p) for p in diff]
            return _finish("d-chain", params, ce, t0)
    return _finish("d-chain", params, None, t0)


def verify_gf_coefficients(c: ConstraintClass, qbound: int = 12) -> TheoremReport:
    """The closed rational form for class ``c`` matches, coefficient by
    coefficient in x, y and q, the brute-force sum over enumerated
    partitions of x^(largest) y^(length) q^(perimeter)."""
    t0 = time.perf_counter()
    params = {"class": str(c), "qbound": qbound}
    expanded = expand(gf_of_class(c), qbound)
    V = ("x", "y", "q")
    acc: dict[tuple[int, int, int], int] = {}
    for n in range(1, qbound + 1):
        for parts in parts_by_perimeter(n):
            if parts_are_member(parts, c):
                key = (parts[0], len(parts), n)
                acc[key] = acc.get(key, 0) + 1
    brute = MultiPoly(V, acc, qbound)
    if expanded != brute:
        diff = (expanded - brute).q_coefficients()
        j = min(diff)
        bad = diff[j].sorted_terms()[0]
        exps = dict(zip(V, bad[0]))
        ce = {
            "class": str(c),
            "monomial": exps,
            "series": expanded.coefficient(exps),
            "enumeration": brute.coefficient(exps),
        }
        return _finish("gf-coefficients", params, ce, t0)
    return _finish("gf-coefficients", params, None, t0)


def _all_classes(max_d: int = 5) -> list[ConstraintClass]:
    out = [UNRESTRICTED, DISTINCT, ODD]
    for d in range(1, max_d + 1):
        out.extend([d_distinct(d), mod_one(d), g_class(d)])
    return out


def verify_gf_all(qbound: int = 12, max_d: int = 5) -> TheoremReport:
    """verify_gf_coefficients across every class (gap parameters 1..max_d)."""
    t0 = time.perf_counter()
    classes = _all_classes(max_d)
    params = {"qbound": qbound, "classes": [str(c) for c in classes]}
    for c in classes:
        report = verify_gf_coefficients(c, qbound)
        if not report.passed:
            return _finish("gf-coefficients", params, report.counterexample, t0)
    return _finish("gf-coefficients", params, None, t0)


# ---------------------------------------------------------------------------
# q-series identities


def _series_andrews_lhs(qbound: int) -> MultiPoly:
    """sum_{n>=0} (-1)^n y^(2n) q^(n(n+1)/2) / ((yq; q)_n), truncated."""
    V = ("y", "q")
    yq = MultiPoly.monomial(V, 1, {"y": 1, "q": 1}, qbound)
    total = MultiPoly.constant(1, V, qbound)
    n = 1
    while n * (n + 1) // 2 <= qbound:
        head = MultiPoly.monomial(
            V, (-1) ** n, {"y": 2 * n, "q": n * (n + 1) // 2}, qbound
        )
        total = total + head * series_inverse(pochhammer(yq, n, qbound), qbound)
        n += 1
    return total


def _series_andrews_middle(qbound: int) -> MultiPoly:
    """1 + sum over distinct-part partitions of (-1)^length
    y^(largest + length) q^size, truncated."""
    acc: dict[tuple[int, int], int] = {(0, 0): 1}
    for n in range(1, qbound + 1):
        for parts in partitions_of_size(n, distinct=True):
            key = (parts[0] + len(parts), n)
            acc[key] = acc.get(key, 0) + (-1) ** len(parts)
    return MultiPoly(("y", "q"), acc, qbound)


def _series_andrews_franklin(qbound: int) -> MultiPoly:
    """Same series, but with the paired partitions cancelled by the
    involution first: only Franklin fixed points contribute."""
    acc: dict[tuple[int, int], int] = {(0, 0): 1}
    for n in range(1, qbound + 1):
        for parts in partitions_of_size(n, distinct=True):
            p = Partition(parts)
            if franklin(p) is None:
                key = (parts[0] + len(parts), n)
                acc[key] = acc.get(key, 0) + (-1) ** len(parts)
    return MultiPoly(("y", "q"), acc, qbound)


def _series_andrews_rhs(qbound: int) -> MultiPoly:
    """1 + sum_{n>=1} (-1)^n (q^(n(3n-1)/2) y^(3n-1) + q^(n(3n+1)/2) y^(3n))."""
    V = ("y", "q")
    total = MultiPoly.constant(1, V, qbound)
    n = 1
    while n * (3 * n - 1) // 2 <= qbound:
        sign = (-1) ** n
        total = total + MultiPoly.monomial(V, sign, {"y": 3 * n - 1, "q": n * (3 * n - 1) // 2}, qbound)
        if n * (3 * n + 1) // 2 <= qbound:
            total = total + MultiPoly.monomial(V, sign, {"y": 3 * n, "q": n * (3 * n + 1) // 2}, qbound)
        n += 1
    return total


def _first_term_difference(a: MultiPoly, b: MultiPoly) -> dict:
    diff = (a - b).q_coefficients()
    j = min(diff)
    exps, _ = diff[j].sorted_terms()[0]
    named = dict(zip(a.variables, exps))
    return {"monomial": named, "lhs": a.coefficient(named), "rhs": b.coefficient(named)}


def verify_andrews_identity(qbound: int = 15) -> TheoremReport:
    """Three expressions for the signed count of distinct-part partitions
    graded by size and largest-part-plus-length agree termwise: the
    alternating q-series, raw enumeration, and the surviving pentagonal
    terms.  Enumeration after Franklin cancellation is checked as a fourth
    route."""
    t0 = time.perf_counter()
    params = {"qbound": qbound}
    a = _series_andrews_lhs(qbound)
    b = _series_andrews_middle(qbound)
    b_franklin = _series_andrews_franklin(qbound)
    c = _series_andrews_rhs(qbound)
    for label, other in (("enumeration", b), ("franklin-paired", b_franklin), ("pentagonal", c)):
        if a != other:
            ce = {"versus": label, **_first_term_difference(a, other)}
            return _finish("andrews-identity", params, ce, t0)
    return _finish("andrews-identity", params, None, t0)


def _series_refined_lhs(qbound: int) -> MultiPoly:
    """sum_{n>=1} x^n y^n q^(n(n+1)/2) / ((xq; q)_n), truncated."""
    V = ("x", "y", "q")
    xq = MultiPoly.monomial(V, 1, {"x": 1, "q": 1}, qbound)
    total = MultiPoly.zero(V, qbound)
    n = 1
    while n * (n + 1) // 2 <= qbound:
        head = MultiPoly.monomial(V, 1, {"x": n, "y": n, "q": n * (n + 1) // 2}, qbound)
        total = total + head * series_inverse(pochhammer(xq, n, qbound), qbound)
        n += 1
    return total


def _series_refined_middle(qbound: int) -> MultiPoly:
    """sum over distinct-part partitions of x^(largest) y^(length) q^size."""
    acc: dict[tuple[int, int, int], int] = {}
    for n in range(1, qbound + 1):
        for parts in partitions_of_size(n, distinct=True):
            key = (parts[0], len(parts), n)
            acc[key] = acc.get(key, 0) + 1
    return MultiPoly(("x", "y", "q"), acc, qbound)


def _series_refined_rhs(qbound: int) -> MultiPoly:
    """sum_{n>=1} (-yq; q)_(n-1) x^(2n-1) y^n q^(n(3n-1)/2) (1 + x y q^(2n))
    / ((xq; q)_n), truncated."""
    V = ("x", "y", "q")
    xq = MultiPoly.monomial(V, 1, {"x": 1, "q": 1}, qbound)
    neg_yq = MultiPoly.monomial(V, -1, {"y": 1, "q": 1}, qbound)
    one = MultiPoly.constant(1, V, qbound)
    total = MultiPoly.zero(V, qbound)
    n = 1
    while n * (3 * n - 1) // 2 <= qbound:
        head = MultiPoly.monomial(V, 1, {"x": 2 * n - 1, "y": n, "q": n * (3 * n - 1) // 2}, qbound)
        tail = one + MultiPoly.monomial(V, 1, {"x": 1, "y": 1, "q": 2 * n}, qbound)
        term = (
            pochhammer(neg_yq, n - 1, qbound)
            * head
            * tail
            * series_inverse(pochhammer(xq, n, qbound), qbound)
        )
        total = total + term
        n += 1
    return total


def _max_distinct_size_for_perimeter(g: int) -> int:
    # the largest distinct-part partition of perimeter g is a staircase
    best = 0
    for length in range(1, g + 1):
        top = g + 1 - length
        if top < length:
            break
        best = max(best, length * top - length * (length - 1) // 2)
    return best


def regrade_limit(qbound: int) -> int:
    """Largest perimeter g such that every distinct-part partition of
    perimeter g has size at most qbound (so size-graded data regrades to a
    complete perimeter-graded series), capped at isqrt(4 * qbound)."""
    import math

    g = math.isqrt(4 * qbound)
    while g >= 1 and _max_distinct_size_for_perimeter(g) > qbound:
        g -= 1
    return g


def verify_refined_identity(qbound: int = 15) -> TheoremReport:
    """The two-variable refinement of the pentagonal-type identity: the
    alternating series, the enumeration of distinct-part partitions graded
    by largest part, length and size, and the staircase-product series all
    agree; substituting x -> y, y -> -y collapses it to the single-variable
    identity; and regrading the enumeration by perimeter recovers the
    rational form for distinct parts."""
    t0 = time.perf_counter()
    g_limit = regrade_limit(qbound)
    params = {"qbound": qbound, "regrade_perimeter_limit": g_limit}
    lhs = _series_refined_lhs(qbound)
    mid = _series_refined_middle(qbound)
    rhs = _series_refined_rhs(qbound)
    for label, other in (("enumeration", mid), ("staircase-product", rhs)):
        if lhs != other:
            ce = {"versus": label, **_first_term_difference(lhs, other)}
            return _finish("refined-identity", params, ce, t0)
    # collapse x -> y, y -> -y: must give the single-variable alternating
    # series minus its constant term
    Vy = ("y", "q")
    y2 = MultiPoly.monomial(Vy, 1, {"y": 1}, qbound)
    collapsed = lhs.substitute({"x": y2, "y": y2.scale(-1)})
    andrews = _series_andrews_lhs(qbound) - MultiPoly.constant(1, Vy, qbound)
    if collapsed != andrews:
        ce = {"versus": "collapsed-to-single-variable", **_first_term_difference(collapsed, andrews)}
        return _finish("refined-identity", params, ce, t0)
    # regrade by perimeter: x^(largest) y^(length) q^(perimeter)
    acc: dict[tuple[int, int, int], int] = {}
    for n in range(1, qbound + 1):
        for parts in partitions_of_size(n, distinct=True):
            g = parts[0] + len(parts) - 1
            if g <= g_limit:
                key = (parts[0], len(parts), g)
                acc[key] = acc.get(key, 0) + 1
    regraded = MultiPoly(("x", "y", "q"), acc, g_limit)
    direct = expand(gf_of_class(DISTINCT), g_limit)
    if regraded != direct:
        ce = {"versus": "perimeter-regrade", **_first_term_difference(direct, regraded)}
        return _finish("refined-identity", params, ce, t0)
    return _finish("refined-identity", params, None, t0)


def rogers_fine_sides(qbound: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the Rogers-Fine transformation under alpha = aq,
    beta = bq, tau = btq, truncated at the q-degree bound.

    The substitution is the loosest one that keeps three free parameters
    while making every coefficient a polynomial: beta = bq restores series
    invertibility of 1/(beta)_n, and tau = btq turns alpha*tau*q/beta into
    the monomial a*t*q^2.
    """
    V = ("a", "b", "t", "q")

    def m(coeff: int = 1, **exps: int) -> MultiPoly:
        return MultiPoly.monomial(V, coeff, exps, qbound)

    alpha = m(a=1, q=1)
    beta = m(b=1, q=1)
    tau = m(b=1, t=1, q=1)
    ratio = m(a=1, t=1, q=2)  # alpha * tau * q / beta
    one = m()
    lhs = MultiPoly.zero(V, qbound)
    n = 0
    while n <= qbound:  # the n-th summand starts at q^n
        term = (
            pochhammer(alpha, n, qbound)
            * series_inverse(pochhammer(beta, n, qbound), qbound)
            * tau**n
        )
        lhs = lhs + term
        n += 1
    rhs = MultiPoly.zero(V, qbound)
    n = 0
    while n * n + n <= qbound:  # the n-th summand starts at q^(n^2 + n)
        head = (
            pochhammer(alpha, n, qbound)
            * pochhammer(ratio, n, qbound)
            * (beta**n)
            * (tau**n)
            * m(q=n * n - n)
            * (one - alpha * tau * m(q=2 * n))
        )
        den = series_inverse(pochhammer(beta, n, qbound), qbound) * series_inverse(
            pochhammer(tau, n + 1, qbound), qbound
        )
        rhs = rhs + head * den
        n += 1
    return lhs, rhs


def verify_rogers_fine(qbound: int = 10) -> TheoremReport:
    """Both sides of the Rogers-Fine transformation, specialized with
    alpha = aq, beta = bq, tau = btq so every coefficient is an integer
    polynomial in a, b, t, agree termwise to the q-degree bound."""
    t0 = time.perf_counter()
    params = {"qbound": qbound, "alpha": "a*q", "beta": "b*q", "tau": "b*t*q"}
    lhs, rhs = rogers_fine_sides(qbound)
    if lhs != rhs:
        ce = _first_term_difference(lhs, rhs)
        return _finish("rogers-fine", params, ce, t0)
    return _finish("rogers-fine", params, None, t0)


# ---------------------------------------------------------------------------
# Congruences and Fibonacci facts


def _h_distinct(n: int) -> int:
    return fibonacci(n)


def _h_parity(n: int) -> tuple[int, int]:
    return count_parity_split(n)


_CONGRUENCE_FAMILIES = (
    ("h_D(3n) == 0 mod 2", 3, 0, "total", 2, 0),
    ("h_D(4n) == 0 mod 3", 4, 0, "total", 3, 0),
    ("h_D(5n) == 0 mod 5", 5, 0, "total", 5, 0),
    ("h_D(6n) == 0 mod 8", 6, 0, "total", 8, 0),
    ("h_D(6n+3) == 2 mod 16", 6, 3, "total", 16, 2),
    ("h_DO(6n) == h_DE(6n) == 0 mod 4", 6, 0, "parity", 4, 0),
    ("h_DO(6n+3) == h_DE(6n+3) == 1 mod 8", 6, 3, "parity", 8, 1),
)


def verify_congruences(max_n: int = 60, enum_limit: int = 16) -> TheoremReport:
    """The seven stated congruences for distinct-part perimeter counts, for
    every argument (multiplier form) up to max_n; the fast counts are
    spot-checked against enumeration for small arguments."""
    t0 = time.perf_counter()
    params = {"max_n": max_n, "enum_limit": enum_limit}
    for label, step, offset, which, modulus, residue in _CONGRUENCE_FAMILIES:
        arg = offset if offset else step
        while arg <= max_n:
            if which == "total":
                value = _h_distinct(arg)
                ok = value % modulus == residue
                values = {"h_D": value}
            else:
                even, odd = _h_parity(arg)
                ok = even == odd and even % modulus == residue
                values = {"h_DE": even, "h_DO": odd}
            if ok and arg <= enum_limit:
                enum_count = sum(
                    1 for parts in parts_by_perimeter(arg) if parts_are_member(parts, DISTINCT)
                )
                expected = values.get("h_D", sum(values.values()))
                if enum_count != expected:
                    ok = False
                    values["enumeration"] = enum_count
            if not ok:
                ce = {"family": label, "argument": arg, "modulus": modulus, "residue": residue, **values}
                return _finish("congruences", params, ce, t0)
            arg += step
    return _finish("congruences", params, None, t0)


def verify_fibonacci(max_add: int = 30, max_div: int = 60) -> TheoremReport:
    """The addition formula F(m+n) = F(m+1) F(n) + F(m) F(n-1) and the
    divisibility rule m | n implies F(m) | F(n)."""
    t0 = time.perf_counter()
    params = {"max_add": max_add, "max_div": max_div}
    fib = [fibonacci(i) for i in range(max_add + max_div + 2)]
    for m in range(0, max_add + 1):
        for n in range(1, max_add + 1):
            lhs = fib[m + n]
            rhs = fib[m + 1] * fib[n] + fib[m] * fib[n - 1]
            if lhs != rhs:
                ce = {"claim": "addition", "m": m, "n": n, "lhs": lhs, "rhs": rhs}
                return _finish("fibonacci", params, ce, t0)
    for m in range(1, max_div + 1):
        for n in range(m, max_div + 1, m):
            if fib[n] % fib[m] != 0:
                ce = {"claim": "divisibility", "m": m, "n": n, "F_m": fib[m], "F_n": fib[n]}
                return _finish("fibonacci", params, ce, t0)
    return _finish("fibonacci", params, None, t0)


def scan_congruence(
    step: int, offset: int, modulus: int, residue: int, max_n: int = 60
) -> TheoremReport:
    """Generic scanner: does h_D(step * n + offset) == residue (mod modulus)
    hold for every argument up to max_n?  Plumbing for exploration; nothing
    beyond the seven stated congruences is asserted anywhere."""
    t0 = time.perf_counter()
    params = {"step": step, "offset": offset, "modulus": modulus, "residue": residue, "max_n": max_n}
    arg = offset if offset >= 1 else step
    while arg <= max_n:
        value = _h_distinct(arg)
        if value % modulus != residue:
            ce = {"argument": arg, "h_D": value, "modulus": modulus, "residue": residue}
            return _finish("congruence-scan", params, ce, t0)
        arg += step
    return _finish("congruence-scan", params, None, t0)


# ---------------------------------------------------------------------------
# Registry


CHECKS: dict[str, Callable[..., TheoremReport]] = {
    "euler-analogue": verify_euler_analogue,
    "powers-of-two": verify_powers_of_two,
    "refinements": verify_refinements,
    "pentagonal-analogue": verify_pentagonal_analogue,
    "d-chain": verify_d_chain,
    "gf-coefficients": verify_gf_all,
    "franklin": verify_franklin,
    "andrews-identity": verify_andrews_identity,
    "refined-identity": verify_refined_identity,
    "rogers-fine": verify_rogers_fine,
    "congruences": verify_congruences,
    "fibonacci": verify_fibonacci,
}

_D_CHAIN_DEFAULT_RANGE = (1, 2, 3, 4, 5)


def run_checks(check_id: str = "all", **overrides) -> list[TheoremReport]:
    """Run one named check, or all of them; reports sorted by check id
    (and gap parameter).  Unknown ids raise KeyError; overrides are passed
    through only to checks that take them."""
    import inspect

    if check_id == "all":
        ids = sorted(CHECKS)
    elif check_id in CHECKS:
        ids = [check_id]
    else:
        raise KeyError(check_id)
    reports: list[TheoremReport] = []
    for cid in ids:
        fn = CHECKS[cid]
        accepted = set(inspect.signature(fn).parameters)
        kwargs = {k: v for k, v in overrides.items() if k in accepted and v is not None}
        if cid == "d-chain":
            ds = [kwargs.pop("d")] if "d" in kwargs else list(_D_CHAIN_DEFAULT_RANGE)
            for d in ds:
                reports.append(fn(d=d, **kwargs))
        else:
            kwargs.pop("d", None)
            reports.append(fn(**kwargs))
    reports.sort(key=lambda r: (r.check_id, r.params.get("d", 0)))
    return reports
