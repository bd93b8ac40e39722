"""Per-crossing-number aggregates, closed forms and the verification report."""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from twobridge import config
from twobridge.diagram import to_alternating, trace_component_count
from twobridge.exact import exact_div, format_rational, pow2, rat
from twobridge.seifert import (
    genus_from_circles,
    left_edge_directions,
    orient_fast,
    orient_oracle,
    seifert_state,
)
from twobridge.words import (
    CaseTag,
    RunWord,
    classify_case,
    count_palindromic,
    count_words,
    enumerate_palindromic,
    ernst_sumners_count,
    involution,
    is_palindromic_type,
    iter_words,
    jacobsthal,
    knot_classes,
    reduce_tail,
    to_symbols,
)

log = logging.getLogger(__name__)


class RangeError(ValueError):
    """Requested crossing number is outside the configured limits."""


@dataclass(frozen=True)
class CrossingStats:
    c: int
    t: int
    t_p: int
    knot_count: int
    s_total: int
    s_p_total: int
    case_totals: tuple[int, int, int, int]
    genus_sum: int
    avg_seifert: Fraction
    avg_genus: Fraction
    epsilon: Fraction

    def as_dict(self) -> dict:
        return {
            "c": self.c,
            "t": self.t,
            "t_p": self.t_p,
            "knot_count": self.knot_count,
            "s_total": self.s_total,
            "s_p_total": self.s_p_total,
            "s1_total": self.case_totals[0],
            "s2_total": self.case_totals[1],
            "s3_total": self.case_totals[2],
            "s4_total": self.case_totals[3],
            "avg_seifert": format_rational(self.avg_seifert),
            "avg_genus": format_rational(self.avg_genus),
            "epsilon": format_rational(self.epsilon),
        }

    def csv_row(self) -> list[str]:
        return [
            str(self.c),
            str(self.t),
            str(self.t_p),
            str(self.knot_count),
            str(self.s_total),
            str(self.s_p_total),
            format_rational(self.avg_seifert),
            format_rational(self.avg_genus),
            format_rational(self.epsilon),
        ]


CSV_COLUMNS = ["c", "t", "t_p", "knots", "s_total", "s_p_total", "avg_seifert", "avg_genus", "epsilon"]


def _check_range(c: int, cap: int) -> None:
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    if c > cap:
        raise RangeError(f"c={c} exceeds the enumeration cap {cap}")


# -- closed forms ---------------------------------------------------------


def s_closed_form(c: int) -> int:
    """Total Seifert circles over T(c)."""
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    return exact_div((3 * c + 5) * pow2(c - 3) + (-1) ** c * (5 - 3 * c), 9)


def sp_closed_form(c: int) -> int:
    """Total Seifert circles over the palindromic words T_p(c)."""
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    if c % 2:
        num = (3 * c + 1) * pow2((c - 3) // 2) + (-1) ** ((c - 1) // 2) * (1 - 3 * c)
    else:
        num = (3 * c + 4) * pow2((c - 4) // 2) + (-1) ** ((c - 2) // 2) * (1 - 3 * c)
    return exact_div(num, 9)


def epsilon(c: int) -> Fraction:
    """Correction term in avg genus = c/4 + 1/12 + epsilon(c)."""
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    r = c % 4
    if r == 0:
        h = pow2((c - 4) // 2)
        return rat(h - 4, 12 * (pow2(c - 3) + h))
    if r == 1:
        return rat(1, 3 * pow2((c - 3) // 2))
    if r == 2:
        h = pow2((c - 4) // 2)
        return rat(h + 3 * c - 11, 12 * (pow2(c - 3) + h - 1))
    return rat(pow2((c + 1) // 2) + 11 - 3 * c, 12 * (pow2(c - 3) + pow2((c - 3) // 2) + 1))


def avg_genus_formula(c: int) -> Fraction:
    return rat(c, 4) + rat(1, 12) + epsilon(c)


def avg_genus_from_totals(c: int, s_total: int, s_p_total: int, knot_count: int) -> Fraction:
    return rat(1 + c, 2) - rat(s_total + s_p_total, 4 * knot_count)


def epsilon_decays(c: int) -> bool:
    """Exact test of ``|epsilon(c)| < 2**(-(c - 10) / 2)``, squared to stay rational."""
    e = epsilon(c)
    return e * e * Fraction(2) ** (c - 10) < 1


# -- enumeration ----------------------------------------------------------


@dataclass
class _Partial:
    t: int = 0
    s_total: int = 0
    case_totals: list[int] = field(default_factory=lambda: [0, 0, 0, 0])

    def merge(self, other: "_Partial") -> None:
        self.t += other.t
        self.s_total += other.s_total
        self.case_totals = [a + b for a, b in zip(self.case_totals, other.case_totals)]


def _scan_chunk(args: tuple[int, tuple[int, ...]]) -> _Partial:
    c, prefix = args
    part = _Partial()
    for w in iter_words(c, prefix):
        s = seifert_state(w).circles
        part.t += 1
        part.s_total += s
        if c >= 5:
            part.case_totals[classify_case(w) - 1] += s
    return part


def _prefixes(c: int, workers: int) -> list[tuple[int, ...]]:
    depth = 0
    while 2**depth < 4 * workers and depth < c - 2:
        depth += 1
    return list(itertools.product((1, 2), repeat=depth))


def aggregate(c: int, *, workers: int = 1, cap: int = config.FULL_ENUMERATION_CAP) -> CrossingStats:
    """Enumerate T(c) and T_p(c) and assemble the exact statistics.

    With ``workers > 1`` the words are split by fixed run prefixes and
    scanned in a process pool; the partial sums are merged in prefix order,
    so the result does not depend on the worker count.
    """
    _check_range(c, cap)
    if workers > 1:
        chunks = [(c, p) for p in _prefixes(c, workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, chunks))
        total = _Partial()
        for p in parts:
            total.merge(p)
    else:
        total = _scan_chunk((c, ()))

    s_p_total = 0
    t_p = 0
    for w in enumerate_palindromic(c):
        t_p += 1
        s_p_total += seifert_state(w).circles

    classes = knot_classes(c)
    knot_count = len(classes)
    genus_sum = sum(genus_from_circles(c, seifert_state(k.representative).circles) for k in classes)

    avg_genus = rat(genus_sum, knot_count)
    via_totals = avg_genus_from_totals(c, total.s_total, s_p_total, knot_count)
    if avg_genus != via_totals:
        raise AssertionError(f"c={c}: per-knot average {avg_genus} != totals-based average {via_totals}")

    return CrossingStats(
        c=c,
        t=total.t,
        t_p=t_p,
        knot_count=knot_count,
        s_total=total.s_total,
        s_p_total=s_p_total,
        case_totals=tuple(total.case_totals),
        genus_sum=genus_sum,
        avg_seifert=rat(total.s_total + s_p_total, 2 * knot_count),
        avg_genus=avg_genus,
        epsilon=avg_genus - rat(c, 4) - rat(1, 12),
    )


def palindromic_total(c: int, cap: int = config.PALINDROMIC_CAP) -> tuple[int, int]:
    """``(t_p(c), s_p(c))`` from palindromic enumeration alone."""
    _check_range(c, cap)
    words = enumerate_palindromic(c)
    return len(words), sum(seifert_state(w).circles for w in words)


# -- verification ---------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool = True
    counterexample: str | None = None
    cases: int = 0

    def fail(self, detail: str) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = detail

    def expect(self, ok: bool, detail: Callable[[], str] | str) -> None:
        self.cases += 1
        if not ok:
            self.fail(detail() if callable(detail) else detail)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "cases": self.cases,
            "counterexample": self.counterexample,
        }


@dataclass
class Report:
    c_min: int
    c_max: int
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def as_dict(self) -> dict:
        return {
            "c_min": self.c_min,
            "c_max": self.c_max,
            "passed": self.passed,
            "checks": [ch.as_dict() for ch in self.checks],
        }

    def lines(self) -> list[str]:
        out = []
        for ch in self.checks:
            line = f"{ch.name}: {'PASS' if ch.passed else 'FAIL'} ({ch.cases} cases)"
            if not ch.passed:
                line += f"  first counterexample: {ch.counterexample}"
            out.append(line)
        return out


# Structural checks that walk every word with the oracle are the slow part.
ORACLE_MAX = 14
STRUCTURE_MAX = 16
CASE_DELTA_MAX = 14
PALINDROMIC_EXTRA = 6


def verify_all(
    c_min: int = 3,
    c_max: int = config.DEFAULT_VERIFY_MAX,
    *,
    cap: int = config.FULL_ENUMERATION_CAP,
    palindromic_cap: int = config.PALINDROMIC_CAP,
) -> Report:
    """Check every counting identity, closed form and recursion over a range of c.

    Full enumeration runs over ``[c_min, c_max]`` (plus the smaller c that
    the recursions reach back to). Palindromic-only checks extend up to
    ``min(c_max + 6, palindromic_cap)``; the decay of the correction term is
    checked from the formula alone up to c = 60.
    """
    if not 3 <= c_min <= c_max:
        raise ValueError(f"need 3 <= min <= max, got {c_min}..{c_max}")
    if c_max > cap:
        raise RangeError(f"max={c_max} exceeds the enumeration cap {cap}")

    names = [
        "word count == Jacobsthal closed form",
        "word count recursion t(c)=t(c-1)+2t(c-2)",
        "palindromic count == closed form",
        "palindromic count recursion",
        "palindromic list == palindromic members of T(c)",
        "knot classes == Ernst-Sumners == (t+t_p)/2",
        "case census t1=2t(c-3), t2=t3=t4=t(c-2)",
        "tail reduction validity and case 3/4 bijections",
        "single component",
        "orient_fast == orient_oracle",
        "two of three strands oriented right",
        "1+c-s even and genus >= 1",
        "orbit invariance of s and genus",
        "case 3 keeps s, case 4 adds 2",
        "s(c) == closed form",
        "s(c) recursion s(c-1)+2s(c-2)+3t(c-2)",
        "s_p(c) == closed form",
        "s_p(c) recursion s_p(c-2)+2s_p(c-4)+6t_p(c-4)",
        "avg genus == c/4 + 1/12 + epsilon(c)",
        "per-knot avg genus == totals-based avg genus",
        "|epsilon(c)| < 2^(-(c-10)/2)",
    ]
    checks = {n: Check(n) for n in names}

    lo = max(3, c_min - 2)
    t_enum: dict[int, int] = {}
    s_enum: dict[int, int] = {}
    words_by_c: dict[int, list[RunWord]] = {}
    s_of: dict[RunWord, int] = {}

    state_check = checks[names[11]]
    for c in range(lo, c_max + 1):
        words = list(iter_words(c))
        words_by_c[c] = words
        t_enum[c] = len(words)
        total = 0
        for w in words:
            s = _attempt(state_check, to_symbols(w), lambda: seifert_state(w).circles)
            s_of[w] = s if s is not None else 0
            total += s_of[w]
        s_enum[c] = total

    for c in range(c_min, c_max + 1):
        words = words_by_c[c]
        t = t_enum[c]
        checks[names[0]].expect(
            t == count_words(c) == jacobsthal(c - 2),
            lambda: f"c={c}: enumerated {t}, closed form {count_words(c)}",
        )
        if c >= 5:
            checks[names[1]].expect(
                t == t_enum[c - 1] + 2 * t_enum[c - 2],
                lambda: f"c={c}: {t} != {t_enum[c - 1]} + 2*{t_enum[c - 2]}",
            )

        pal = enumerate_palindromic(c)
        pal_set = set(pal)
        stray = next((w for w in words if is_palindromic_type(w) != (w in pal_set)), None)
        checks[names[4]].expect(
            stray is None and pal_set <= set(words),
            lambda: f"c={c}: {to_symbols(stray) if stray else 'palindromic word outside T(c)'}",
        )

        classes = knot_classes(c)
        es = ernst_sumners_count(c)
        tp = count_palindromic(c)
        checks[names[5]].expect(
            len(classes) == es and 2 * es == t + tp,
            lambda: f"c={c}: classes={len(classes)}, formula={es}, (t+t_p)/2={(t + tp) / 2}",
        )

        if c >= 6:
            tally = Counter(classify_case(w) for w in words)
            expected = {
                CaseTag.CASE1: 2 * t_enum.get(c - 3, count_words(c - 3)),
                CaseTag.CASE2: t_enum.get(c - 2, count_words(c - 2)),
                CaseTag.CASE3: t_enum.get(c - 2, count_words(c - 2)),
                CaseTag.CASE4: t_enum.get(c - 2, count_words(c - 2)),
            }
            checks[names[6]].expect(
                all(tally[k] == v for k, v in expected.items()),
                lambda: f"c={c}: tallies {dict(sorted((int(k), v) for k, v in tally.items()))}",
            )

        if c >= 5:
            _check_reductions(checks[names[7]], c, words, checks[names[13]], s_of)

        for w in words:
            sym = to_symbols(w)
            d = to_alternating(w)
            if c <= STRUCTURE_MAX:
                n = _attempt(checks[names[8]], sym, lambda: trace_component_count(d))
                if n is not None:
                    checks[names[8]].expect(n == 1, lambda: f"{sym}: {n} components")
            if c <= ORACLE_MAX:
                oracle = _attempt(checks[names[9]], sym, lambda: orient_oracle(d))
                if oracle is not None:
                    checks[names[9]].expect(orient_fast(w, d) == oracle, sym)
                dirs = _attempt(checks[names[10]], sym, lambda: left_edge_directions(d))
                if dirs is not None:
                    checks[names[10]].expect(sorted(dirs) == [-1, 1, 1], sym)
            if c <= STRUCTURE_MAX:
                s = s_of[w]
                ok = (1 + c - s) % 2 == 0 and (1 + c - s) // 2 >= 1 and 1 <= s <= c + 2
                checks[names[11]].expect(ok, lambda: f"{sym}: s={s}")
                partner = involution(w)
                checks[names[12]].expect(s_of[partner] == s, lambda: f"{sym}: s={s}, partner s={s_of[partner]}")

        checks[names[14]].expect(
            s_enum[c] == s_closed_form(c),
            lambda: f"c={c}: enumerated {s_enum[c]}, closed form {s_closed_form(c)}",
        )
        if c >= 5:
            rhs = s_enum[c - 1] + 2 * s_enum[c - 2] + 3 * t_enum[c - 2]
            checks[names[15]].expect(s_enum[c] == rhs, lambda: f"c={c}: {s_enum[c]} != {rhs}")

        st = _attempt(checks[names[18]], f"c={c}", lambda: aggregate(c, cap=cap))
        if st is None:
            continue
        checks[names[18]].expect(
            st.avg_genus == avg_genus_formula(c) and st.epsilon == epsilon(c),
            lambda: f"c={c}: enumerated {st.avg_genus}, formula {avg_genus_formula(c)}",
        )
        via_totals = avg_genus_from_totals(c, st.s_total, st.s_p_total, st.knot_count)
        checks[names[19]].expect(st.avg_genus == via_totals, lambda: f"c={c}: {st.avg_genus} != {via_totals}")

    p_max = max(c_max, min(c_max + PALINDROMIC_EXTRA, palindromic_cap))
    tp_enum: dict[int, int] = {}
    sp_enum: dict[int, int] = {}
    for c in range(max(3, c_min - 4), p_max + 1):
        words = enumerate_palindromic(c)
        tp_enum[c] = len(words)
        sp_enum[c] = 0
        for w in words:
            s = _attempt(state_check, to_symbols(w), lambda: seifert_state(w).circles)
            sp_enum[c] += s or 0
    for c in range(c_min, p_max + 1):
        checks[names[2]].expect(
            tp_enum[c] == count_palindromic(c),
            lambda: f"c={c}: enumerated {tp_enum[c]}, closed form {count_palindromic(c)}",
        )
        checks[names[16]].expect(
            sp_enum[c] == sp_closed_form(c),
            lambda: f"c={c}: enumerated {sp_enum[c]}, closed form {sp_closed_form(c)}",
        )
        if c >= 7:
            checks[names[3]].expect(
                tp_enum[c] == tp_enum[c - 2] + 2 * tp_enum[c - 4],
                lambda: f"c={c}: {tp_enum[c]} != {tp_enum[c - 2]} + 2*{tp_enum[c - 4]}",
            )
            rhs_p = sp_enum[c - 2] + 2 * sp_enum[c - 4] + 6 * tp_enum[c - 4]
            checks[names[17]].expect(sp_enum[c] == rhs_p, lambda: f"c={c}: {sp_enum[c]} != {rhs_p}")

    for c in range(c_min, max(c_max, config.EPSILON_DECAY_MAX) + 1):
        checks[names[20]].expect(epsilon_decays(c), lambda: f"c={c}: epsilon={epsilon(c)}")

    report = Report(c_min, c_max, [checks[n] for n in names])
    for line in report.lines():
        log.debug(line)
    return report


def _check_reductions(
    check: Check,
    c: int,
    words: list[RunWord],
    delta_check: Check,
    s_of: dict[RunWord, int],
) -> None:
    reduced_by_case: dict[CaseTag, list[RunWord]] = {k: [] for k in CaseTag}
    for w in words:
        case = classify_case(w)
        try:
            r, rc = reduce_tail(w)
        except ValueError as exc:
            check.fail(f"{to_symbols(w)}: {exc}")
            continue
        want = c - 1 if case in (CaseTag.CASE1, CaseTag.CASE2) else c - 2
        check.expect(rc == want == r.c, lambda: f"{to_symbols(w)} -> {to_symbols(r)} (c={rc}, want {want})")
        reduced_by_case[case].append(r)
        if c <= CASE_DELTA_MAX and case in (CaseTag.CASE3, CaseTag.CASE4):
            s_r = s_of[r] if r in s_of else seifert_state(r).circles
            delta = 0 if case is CaseTag.CASE3 else 2
            delta_check.expect(
                s_of[w] == s_r + delta,
                lambda: f"{to_symbols(w)}: s={s_of[w]}, reduced {to_symbols(r)} s={s_r}",
            )
    target = sorted(iter_words(c - 2))
    for case in (CaseTag.CASE3, CaseTag.CASE4):
        check.expect(
            sorted(reduced_by_case[case]) == target,
            lambda: f"c={c}: case {int(case)} reductions are not a bijection onto T({c - 2})",
        )
    # cases 1 and 2 together cover T(c-1) once each
    check.expect(
        sorted(reduced_by_case[CaseTag.CASE1] + reduced_by_case[CaseTag.CASE2]) == sorted(iter_words(c - 1)),
        lambda: f"c={c}: case 1 and 2 reductions do not partition T({c - 1})",
    )


def _attempt(check: Check, label: str, fn: Callable):
    """Run ``fn``; an exception becomes a failure of ``check`` instead of aborting the report."""
    try:
        return fn()
    except (ValueError, ArithmeticError, AssertionError) as exc:
        check.expect(False, f"{label}: {exc}")
        return None
