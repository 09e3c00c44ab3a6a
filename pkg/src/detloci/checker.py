"""Hypothesis checks for the known dimension and smoothness results on W(b;a).

Each rule is a list of named inequality predicates over a :class:`DegreeSpec`.
Evaluating a rule yields a :class:`Verdict` carrying the full trace, so a
guarantee can always be audited against the conditions that produced it.

Rule ids:

* ``DIM-FLAG``         dimension via induction along the column-deletion flag
                       (a_0 > b_t plus a growth condition on the last columns);
                       the c = 2 case is handled by the codimension-two theory.
* ``DIM-KNOWN-RANGE``  dimension formula in the range 2 <= c <= 5, n > c.
* ``DIM-EXPLICIT``     explicit inequalities valid without n > c / char 0.
* ``SMOOTH-C5``        generically smooth component, c >= 5.
* ``SMOOTH-C34``       the same argument specialised to c = 3, 4.
* ``SMOOTH-LOW-C``     unconditional smoothness for c = 2 (n - c >= 1) and
                       3 <= c <= 4 (n - c >= 2).
* ``CONJ-DIM``         conjectured dimension formula (never a guarantee).
* ``CONJ-SMOOTH``      conjectured generic smoothness (never a guarantee).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

from .combinatorics import conjectured_dim, upper_bound_status
from .degrees import CharFlag, DegreeSpec, has_degenerate_entries, is_nonempty
from .errors import EmptyFamily


class Guarantee(str, Enum):
    DIM_EQUALS = "DIM_EQUALS"
    SMOOTH_COMPONENT = "SMOOTH_COMPONENT"
    NOTHING = "NOTHING"


RULE_IDS = (
    "DIM-FLAG",
    "DIM-KNOWN-RANGE",
    "DIM-EXPLICIT",
    "SMOOTH-C5",
    "SMOOTH-C34",
    "SMOOTH-LOW-C",
    "CONJ-DIM",
    "CONJ-SMOOTH",
)
CONJECTURE_IDS = frozenset({"CONJ-DIM", "CONJ-SMOOTH"})

Pred = Callable[[DegreeSpec, CharFlag], bool]


@dataclass(frozen=True)
class Verdict:
    rule_id: str
    applies: bool
    guarantees: Guarantee
    trace: tuple[tuple[str, bool], ...]
    notes: tuple[str, ...] = ()
    predicts: str | None = None  # only for conjectures

    def __post_init__(self):
        if self.guarantees is not Guarantee.NOTHING:
            assert self.applies and all(ok for _, ok in self.trace), self

    def to_dict(self) -> dict[str, Any]:
        return {
            "rule": self.rule_id,
            "applies": self.applies,
            "guarantees": self.guarantees.value,
            "trace": [[cond, ok] for cond, ok in self.trace],
            "notes": list(self.notes),
            "predicts": self.predicts,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Verdict":
        return cls(d["rule"], bool(d["applies"]), Guarantee(d["guarantees"]),
                   tuple((str(c), bool(ok)) for c, ok in d["trace"]),
                   tuple(d.get("notes", ())), d.get("predicts"))


# --- predicate helpers ------------------------------------------------------
# Labels use the literature's indices: a is 0-based, b is 1-based.

def _gt(label: str, lhs: Callable[[DegreeSpec], int], rhs: Callable[[DegreeSpec], int]):
    def pred(s: DegreeSpec, ch: CharFlag) -> bool:
        return lhs(s) > rhs(s)
    return label, pred


def _a(j: Callable[[DegreeSpec], int]):
    return lambda s: s.a[j(s)]


def _mu(s: DegreeSpec) -> int:
    return min(s.c // 2 + 1, s.t)


def _region(strict: bool) -> Callable[[DegreeSpec], bool]:
    def check(s: DegreeSpec) -> bool:
        mu = _mu(s)
        pairs = [(s.a[i - mu], s.bi(i)) for i in range(mu, s.t + 1)]
        return all(x > y if strict else x >= y for x, y in pairs)
    return check


def _cond(label: str, fn: Callable[[DegreeSpec], bool]):
    return label, lambda s, ch: bool(fn(s))


A0_GT_BT = _gt("a_0 > b_t", _a(lambda s: 0), lambda s: s.bi(s.t))
N_GE_C = _cond("n >= c", lambda s: s.n >= s.c)
REGION_WEAK = _cond("a_{i-mu} >= b_i for mu <= i <= t, mu = min([c/2]+1, t)", _region(False))


def _evaluate(rule_id: str, conds, s: DegreeSpec, ch: CharFlag, guarantee: Guarantee,
              notes=(), predicts=None) -> Verdict:
    trace = tuple((label, bool(pred(s, ch))) for label, pred in conds)
    applies = all(ok for _, ok in trace)
    give = guarantee if applies and rule_id not in CONJECTURE_IDS else Guarantee.NOTHING
    return Verdict(rule_id, applies, give, trace, tuple(notes), predicts)


def _require_nonempty(s: DegreeSpec):
    if not is_nonempty(s):
        raise EmptyFamily(f"W(b;a) is empty for {s.key()}")


# --- rules --------------------------------------------------------------------

_FLAG_NOTE = ("equality of dimensions propagates from the scheme defined by the first "
              "t+c-2 columns; the extra hom-vanishing input is not decidable from degrees "
              "alone and is supplied here by the inequalities in the trace")


def check_thm_dim(s: DegreeSpec, ch: CharFlag = CharFlag(0)) -> Verdict:
    """``DIM-FLAG``: dim W = lambda_c + K_3 + ... + K_c."""
    _require_nonempty(s)
    t, c = s.t, s.c
    if c == 2:
        conds = [_cond("c = 2", lambda s: s.c == 2),
                 _cond("n - c >= 1", lambda s: s.n - s.c >= 1)]
        notes = ["codimension two: dim W = lambda_2, and the Hilbert scheme is smooth at "
                 "every point of W when n - c >= 1"]
        return _evaluate("DIM-FLAG", conds, s, ch, Guarantee.DIM_EQUALS, notes)
    conds = [N_GE_C, A0_GT_BT]
    if c >= 6:
        def grow(s, ch):
            if s.a[t + 3] > s.a[t - 2]:
                return True
            return ch.is_zero and s.a[t + 4] > s.a[t - 2]
        conds.append(("a_{t+3} > a_{t-2} or (char 0 and a_{t+4} > a_{t-2})", grow))
    else:
        conds.append(_gt("a_{t+c-2} > a_{t-2}", _a(lambda s: s.t + s.c - 2), _a(lambda s: s.t - 2)))
    return _evaluate("DIM-FLAG", conds, s, ch, Guarantee.DIM_EQUALS, [_FLAG_NOTE])


def check_known_range(s: DegreeSpec, ch: CharFlag = CharFlag(0)) -> Verdict:
    """``DIM-KNOWN-RANGE``: 2 <= c <= 5, n - c > 0 (char 0 when c = 5)."""
    _require_nonempty(s)
    conds = [
        _cond("2 <= c <= 5", lambda s: 2 <= s.c <= 5),
        _cond("n - c > 0", lambda s: s.n > s.c),
        ("char 0 if c = 5", lambda s, ch: s.c != 5 or ch.is_zero),
        REGION_WEAK,
    ]
    return _evaluate("DIM-KNOWN-RANGE", conds, s, ch, Guarantee.DIM_EQUALS)


def check_explicit_dim(s: DegreeSpec, ch: CharFlag = CharFlag(0)) -> Verdict:
    """``DIM-EXPLICIT``: explicit inequalities for c = 5, n = c = 4 and n = c = 3.

    For n = c = 3 the condition on b is the strict a_{i-2} > b_i.
    """
    _require_nonempty(s)
    t, c, a = s.t, s.c, s.a
    conds = [N_GE_C, REGION_WEAK]
    if c == 5:
        conds.append(_cond("a_{t+3} > a_{t-1} + a_t + a_{t+1} - a_0 - a_1",
                           lambda s: a[t + 3] > a[t - 1] + a[t] + a[t + 1] - a[0] - a[1]))
    elif c == 4:
        conds.append(_cond("n = c = 4", lambda s: s.n == 4))
        conds.append(_cond("a_{t+2} > a_{t-1} + a_t - a_0",
                           lambda s: a[t + 2] > a[t - 1] + a[t] - a[0]))
    elif c == 3:
        conds.append(_cond("n = c = 3", lambda s: s.n == 3))
        conds.append(_gt("a_{t+1} > a_{t-1}", _a(lambda s: t + 1), _a(lambda s: t - 1)))
        conds.append(_cond("a_{i-2} > b_i for 2 <= i <= t",
                           lambda s: all(a[i - 2] > s.bi(i) for i in range(2, t + 1))))
    else:
        conds.append(_cond("c in {3, 4, 5}", lambda s: False))
    return _evaluate("DIM-EXPLICIT", conds, s, ch, Guarantee.DIM_EQUALS)


def _smooth_c5(s: DegreeSpec, ch: CharFlag) -> Verdict:
    t = s.t
    conds = [
        _cond("n - c >= 1", lambda s: s.n - s.c >= 1),
        _cond("c >= 5", lambda s: s.c >= 5),
        A0_GT_BT,
    ]
    if s.c >= 5:
        conds.append(_cond("a_{t+3} > a_{t-1} + a_t - b_1",
                           lambda s: s.a[t + 3] > s.a[t - 1] + s.a[t] - s.bi(1)))
    return _evaluate("SMOOTH-C5", conds, s, ch, Guarantee.SMOOTH_COMPONENT,
                     ["the component has dimension lambda_c + K_3 + ... + K_c"])


def _smooth_c34(s: DegreeSpec, ch: CharFlag) -> Verdict:
    t = s.t
    conds = [
        _cond("n - c >= 1", lambda s: s.n - s.c >= 1),
        _cond("c in {3, 4}", lambda s: s.c in (3, 4)),
        A0_GT_BT,
    ]
    if s.c in (3, 4):
        conds.append(_cond("a_{t+c-2} > a_{t-1} + a_t - b_1",
                           lambda s: s.a[t + s.c - 2] > s.a[t - 1] + s.a[t] - s.bi(1)))
    return _evaluate("SMOOTH-C34", conds, s, ch, Guarantee.SMOOTH_COMPONENT,
                     ["the component has dimension lambda_c + K_3 + ... + K_c"])


def _smooth_low_c(s: DegreeSpec, ch: CharFlag) -> Verdict:
    if s.c == 2:
        conds = [_cond("c = 2", lambda s: True), _cond("n - c >= 1", lambda s: s.n - s.c >= 1)]
        notes = ["the Hilbert scheme is smooth at every point of W"]
    else:
        conds = [_cond("3 <= c <= 4", lambda s: 3 <= s.c <= 4),
                 _cond("n - c >= 2", lambda s: s.n - s.c >= 2)]
        notes = []
    return _evaluate("SMOOTH-LOW-C", conds, s, ch, Guarantee.SMOOTH_COMPONENT, notes)


def smoothness_verdicts(s: DegreeSpec, ch: CharFlag = CharFlag(0)) -> list[Verdict]:
    _require_nonempty(s)
    return [_smooth_c5(s, ch), _smooth_c34(s, ch), _smooth_low_c(s, ch)]


def check_smoothness(s: DegreeSpec, ch: CharFlag = CharFlag(0)) -> Verdict:
    """Best verdict among the smoothness rules (first one that fires, else ``SMOOTH-C5``)."""
    vs = smoothness_verdicts(s, ch)
    for v in vs:
        if v.guarantees is Guarantee.SMOOTH_COMPONENT:
            return v
    return vs[0]


def is_counterexample_family(s: DegreeSpec) -> bool:
    """n = c, t = 2, b = (0, 0), a = (1, ..., 1): c+1 general points in P^c."""
    return s.n == s.c and s.t == 2 and s.b == (0, 0) and all(x == 1 for x in s.a)


def check_conjectures(s: DegreeSpec, ch: CharFlag = CharFlag(0)) -> list[Verdict]:
    """Region membership for the two open conjectures. Never a guarantee."""
    _require_nonempty(s)
    excluded = is_counterexample_family(s)
    region = _region(strict=s.n == s.c)
    rel = ">" if s.n == s.c else ">="
    dim_conds = [
        N_GE_C,
        _cond(f"a_{{i-mu}} {rel} b_i for mu <= i <= t, mu = min([c/2]+1, t)", region),
        _cond("not the excluded family W(0,0; 1,...,1) with n = c", lambda s: not excluded),
    ]
    notes = ["spec is the excluded (counterexample) family"] if excluded and region(s) else []
    dim = _evaluate("CONJ-DIM", dim_conds, s, ch, Guarantee.NOTHING, notes,
                    predicts=f"dim W = {conjectured_dim(s)}")
    smooth_conds = [
        _cond("n - c >= 2", lambda s: s.n - s.c >= 2),
        _cond("c >= 5", lambda s: s.c >= 5),
        A0_GT_BT,
    ]
    smooth = _evaluate("CONJ-SMOOTH", smooth_conds, s, ch, Guarantee.NOTHING,
                       predicts="closure of W is a generically smooth component")
    return [dim, smooth]


def boundary_case(s: DegreeSpec) -> bool:
    """a_{t+c-2} = a_{t-2}: the equality case left open by the flag argument."""
    return s.c >= 3 and s.a[s.t + s.c - 2] == s.a[s.t - 2]


# --- report ------------------------------------------------------------------

@dataclass(frozen=True)
class Report:
    spec: DegreeSpec
    nonempty: bool
    conjectured_dim: int | None
    upper_bound: int | None
    verdicts: tuple[Verdict, ...] = ()
    counterexample_flag: bool = False
    nonminimal: bool = False
    boundary: bool = False
    characteristic: int = 0
    notes: tuple[str, ...] = field(default_factory=tuple)

    def guaranteed(self) -> list[str]:
        return [v.rule_id for v in self.verdicts if v.guarantees is not Guarantee.NOTHING]

    def rule_bits(self) -> str:
        """One character per rule id: G guaranteed, A applies (conjecture), - otherwise."""
        by_id = {v.rule_id: v for v in self.verdicts}
        out = []
        for rid in RULE_IDS:
            v = by_id.get(rid)
            if v is None or not v.applies:
                out.append("-")
            else:
                out.append("G" if v.guarantees is not Guarantee.NOTHING else "A")
        return "".join(out)

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "characteristic": self.characteristic,
            "nonempty": self.nonempty,
            "conjectured_dim": self.conjectured_dim,
            "upper_bound": self.upper_bound,
            "counterexample_flag": self.counterexample_flag,
            "nonminimal": self.nonminimal,
            "boundary": self.boundary,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "notes": list(self.notes),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Report":
        return cls(
            spec=DegreeSpec.from_dict(d["spec"]),
            nonempty=bool(d["nonempty"]),
            conjectured_dim=d["conjectured_dim"],
            upper_bound=d["upper_bound"],
            verdicts=tuple(Verdict.from_dict(v) for v in d["verdicts"]),
            counterexample_flag=bool(d["counterexample_flag"]),
            nonminimal=bool(d["nonminimal"]),
            boundary=bool(d["boundary"]),
            characteristic=int(d.get("characteristic", 0)),
            notes=tuple(d["notes"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        s = self.spec
        lines = [f"W(b;a) with n={s.n} t={s.t} c={s.c} b={list(s.b)} a={list(s.a)}"
                 f"  (char {self.characteristic})"]
        if not self.nonempty:
            lines.append("nonempty: no")
            lines += [f"note: {x}" for x in self.notes]
            return "\n".join(lines)
        lines.append("nonempty: yes")
        lines.append(f"conjectured dim: {self.conjectured_dim}")
        lines.append(f"upper bound: {self.upper_bound}")
        if self.counterexample_flag:
            lines.append("counterexample family: yes")
        for v in self.verdicts:
            head = f"[{v.rule_id}] applies={'yes' if v.applies else 'no'} -> {v.guarantees.value}"
            if v.predicts:
                head += f" (predicts: {v.predicts})"
            lines.append(head)
            for cond, ok in v.trace:
                lines.append(f"    {'ok ' if ok else 'NO '} {cond}")
            lines += [f"    note: {x}" for x in v.notes]
        lines += [f"note: {x}" for x in self.notes]
        return "\n".join(lines)


def analyze(s: DegreeSpec, ch: CharFlag = CharFlag(0)) -> Report:
    """Run every rule on ``s``. Empty families give a report with no verdicts."""
    nonminimal = has_degenerate_entries(s)
    common = dict(spec=s, nonminimal=nonminimal, characteristic=ch.characteristic)
    if not is_nonempty(s):
        return Report(nonempty=False, conjectured_dim=None, upper_bound=None,
                      notes=("W(b;a) is empty: need a_{i-1} >= b_i for all i and > for some i",),
                      **common)
    dim = conjectured_dim(s)
    verdicts = [check_thm_dim(s, ch), check_known_range(s, ch), check_explicit_dim(s, ch)]
    verdicts += smoothness_verdicts(s, ch)
    verdicts += check_conjectures(s, ch)
    flag = is_counterexample_family(s)
    notes = [upper_bound_status(s).note]
    if flag:
        notes.append(f"actual dim <= {s.c * (s.c + 1)} < {dim}: the c+1 points move in "
                     f"(P^{s.c})^{s.c + 1}")
    if nonminimal:
        notes.append("some a_j = b_i: matrices may have constant entries (non-minimal presentation)")
    if boundary_case(s):
        notes.append("a_{t+c-2} = a_{t-2}: boundary case, flagged for manual study")
    if s.n < s.c:
        notes.append("n < c: no codimension c subscheme of P^n; values are formal")
    return Report(nonempty=True, conjectured_dim=dim, upper_bound=dim, verdicts=tuple(verdicts),
                  counterexample_flag=flag, boundary=boundary_case(s), notes=tuple(notes), **common)
