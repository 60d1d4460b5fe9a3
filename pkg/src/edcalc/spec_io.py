"""Parsing of the group-description DSL and report serialization.

Grammar::

    group   := product ( "/" mu )?
    product := factor ( "*" factor )*
    factor  := base ( "^" int )?
    base    := "Spin(" int ")" | "Sp(" int ")" | "SL(" int ")" | "E6"
    mu      := "[" tuple ("," tuple)* "]"
    tuple   := "(" entry ("," entry)* ")"
    entry   := int | "(" int "," int ")"

One entry per factor, in factor order; a Spin(4k) factor contributes a nested
pair.  ``Sp(8)`` denotes the rank-4 group Sp(2*4).  Central-subgroup tuples
use additive integer coordinates (a primitive 4th root i is 1, -i is 3).
"""

import json
from dataclasses import dataclass

from .abelian import GroupElement
from .basis_search import BasisCandidate
from .catalog import E6, SL, SP, SPIN, GroupSpec, SimpleFactor
from .errors import (ArityMismatch, BadParameter, DslSyntaxError,
                     ValueOutOfRange)
from .freeness import FreenessVerdict

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# DSL parsing
# ---------------------------------------------------------------------------

@dataclass
class _Cursor:
    text: str
    pos: int = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise DslSyntaxError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def take_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise DslSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _prime_power(q: int, pos: int):
    if q < 2:
        raise ValueOutOfRange(f"SL({q}) is not a prime power", pos)
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise ValueOutOfRange("SL parameter is not a prime power", pos)
            return p, k
    raise ValueOutOfRange("SL parameter is not a prime power", pos)


def _parse_factor(cur: _Cursor):
    cur.skip_ws()
    pos = cur.pos
    if cur.text.startswith("Spin", cur.pos):
        cur.take("Spin")
        cur.take("(")
        n = cur.take_int()
        cur.take(")")
        try:
            f = SimpleFactor(SPIN, n=n)
        except BadParameter as e:
            raise ValueOutOfRange(str(e), pos) from e
    elif cur.text.startswith("Sp", cur.pos):
        cur.take("Sp")
        cur.take("(")
        n = cur.take_int()
        cur.take(")")
        if n % 2 != 0:
            raise ValueOutOfRange(f"Sp({n}): the argument must be even (2n)", pos)
        try:
            f = SimpleFactor(SP, n=n // 2)
        except BadParameter as e:
            raise ValueOutOfRange(str(e), pos) from e
    elif cur.text.startswith("SL", cur.pos):
        cur.take("SL")
        cur.take("(")
        q = cur.take_int()
        cur.take(")")
        p, k = _prime_power(q, pos)
        f = SimpleFactor(SL, p=p, k=k)
    elif cur.text.startswith("E6", cur.pos):
        cur.take("E6")
        f = SimpleFactor(E6)
    else:
        raise DslSyntaxError("expected a factor (Spin/Sp/SL/E6)", cur.pos)

    count = 1
    if cur.peek() == "^":
        cur.take("^")
        count = cur.take_int()
        if count < 1:
            raise ValueOutOfRange("exponent must be >= 1", pos)
    return [f] * count


def _parse_tuple(cur: _Cursor, factors):
    cur.take("(")
    coords = []
    for i, f in enumerate(factors):
        width = len(f.center_orders)
        if width == 2:
            if cur.peek() != "(":
                raise ArityMismatch(
                    f"factor {f} has a two-coordinate center; expected a "
                    "nested pair (a,b)", cur.pos)
            cur.take("(")
            coords.append(cur.take_int())
            cur.take(",")
            coords.append(cur.take_int())
            cur.take(")")
        else:
            if cur.peek() == "(":
                raise ArityMismatch(
                    f"factor {f} has a cyclic center; expected a plain integer",
                    cur.pos)
            coords.append(cur.take_int())
        if i < len(factors) - 1:
            cur.take(",")
    cur.take(")")
    return GroupElement(tuple(coords))


def parse(text: str) -> GroupSpec:
    """Parse a group description into a (non-canonicalized) GroupSpec."""
    cur = _Cursor(text)
    factors = _parse_factor(cur)
    while cur.peek() == "*":
        cur.take("*")
        factors.extend(_parse_factor(cur))
    mu = []
    if cur.peek() == "/":
        cur.take("/")
        cur.take("[")
        mu.append(_parse_tuple(cur, factors))
        while cur.peek() == ",":
            cur.take(",")
            mu.append(_parse_tuple(cur, factors))
        cur.take("]")
    if not cur.done():
        raise DslSyntaxError("trailing input", cur.pos)
    total = sum(len(f.center_orders) for f in factors)
    for g in mu:
        if len(g.coords) != total:
            raise ArityMismatch(
                f"mu tuple has {len(g.coords)} coordinates, expected {total}")
    return GroupSpec(tuple(factors), tuple(mu))


def render(spec: GroupSpec) -> str:
    """Canonical text for a GroupSpec; parse(render(s)) == s."""
    parts = []
    i = 0
    factors = spec.factors
    while i < len(factors):
        j = i
        while j < len(factors) and factors[j] == factors[i]:
            j += 1
        name = str(factors[i])
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    out = " * ".join(parts)
    if spec.mu_generators:
        tuples = []
        for g in spec.mu_generators:
            entries = []
            pos = 0
            for f in factors:
                w = len(f.center_orders)
                if w == 2:
                    entries.append(f"({g.coords[pos]},{g.coords[pos + 1]})")
                else:
                    entries.append(str(g.coords[pos]))
                pos += w
            tuples.append("(" + ",".join(entries) + ")")
        out += " / [" + ", ".join(tuples) + "]"
    return out


# ---------------------------------------------------------------------------
# Report serialization
# ---------------------------------------------------------------------------

def _int_str(x):
    return None if x is None else str(x)


def _basis_dict(report):
    if report.basis is None:
        return None
    b = report.basis
    chars = []
    for i, (chi, img) in enumerate(zip(b.chars, b.socle_images)):
        entry = {
            "char": list(chi.coords),
            "socle_image": list(img),
            "in_b0": i in report.b0,
        }
        if i < len(report.verdicts):
            v = report.verdicts[i]
            entry["free"] = v.free
            entry["freeness_reason"] = v.reason
            if v.detail:
                entry["freeness_detail"] = v.detail
        chars.append(entry)
    return {
        "chars": chars,
        "score": _int_str(b.score),
        "certified": b.certified,
        "strict_lifts": b.strict,
    }


def report_to_dict(report) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "group": report.group,
        "prime": report.prime,
        "dim_g": _int_str(report.dim_g),
        "rank_z": report.rank_z,
        "permutation": list(report.permutation),
        "basis": _basis_dict(report),
        "lower": _int_str(report.lower),
        "lower_raw": _int_str(report.lower_raw),
        "upper": _int_str(report.upper),
        "exact": report.exact,
        "ed": _int_str(report.ed),
        "ed_red_upper": _int_str(report.ed_red_upper),
        "ed_red_exact": report.ed_red_exact,
        "ed_red": _int_str(report.ed_red),
        "n_extension": _int_str(report.n_extension),
        "hypothesis_failures": list(report.hypothesis_failures),
        "caveats": list(report.caveats),
    }


def emit(report, fmt: str = "json") -> str:
    """Serialize a report; json output is byte-stable for equal reports."""
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"group      : {report.group}",
             f"prime      : {report.prime}",
             f"dim G      : {report.dim_g}",
             f"rank Z(G)  : {report.rank_z}"]
    if report.exact:
        lines.append(f"ed(G)      : {report.ed}  (exact)")
    else:
        lo = "?" if report.lower is None else report.lower
        up = "?" if report.upper is None else report.upper
        lines.append(f"ed(G)      : {lo} <= ed <= {up}  (bounds only)")
    if report.ed_red_exact:
        lines.append(f"ed(G_red)  : {report.ed_red}  (exact)")
    elif report.ed_red_upper is not None:
        lines.append(f"ed(G_red)  : <= {report.ed_red_upper}")
    else:
        lines.append("ed(G_red)  : unavailable")
    if report.n_extension is not None:
        lines.append(f"n(omega)   : {report.n_extension}  (extension weight)")
    if report.basis is not None:
        lines.append(f"basis score: {report.basis.score}")
        for i, (chi, img) in enumerate(zip(report.basis.chars,
                                           report.basis.socle_images)):
            mark = "*" if i in report.b0 else " "
            verdict = ""
            if i < len(report.verdicts):
                v = report.verdicts[i]
                verdict = f"  [{'free' if v.free else 'not free'}: {v.reason}]"
            lines.append(f"  {mark} chi={chi.coords} socle={img}{verdict}")
    for s in report.hypothesis_failures:
        lines.append(f"! {s}")
    for s in report.caveats:
        lines.append(f"- {s}")
    return "\n".join(lines) + "\n"


def report_from_json(text: str):
    """Inverse of ``emit(report, "json")``."""
    from .engine import EdReport
    d = json.loads(text)
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {d.get('schema_version')}")

    def num(key):
        v = d.get(key)
        return None if v is None else int(v)

    basis = None
    b0 = []
    verdicts = []
    if d.get("basis") is not None:
        bd = d["basis"]
        chars = []
        images = []
        for i, entry in enumerate(bd["chars"]):
            chars.append(GroupElement(tuple(entry["char"])))
            images.append(tuple(entry["socle_image"]))
            if entry.get("in_b0"):
                b0.append(i)
            if "free" in entry:
                verdicts.append(FreenessVerdict(
                    entry["free"], entry["freeness_reason"],
                    entry.get("freeness_detail", "")))
        basis = BasisCandidate(tuple(chars), tuple(images), int(bd["score"]),
                               bd["certified"], bd["strict_lifts"])
    return EdReport(
        group=d["group"],
        prime=d["prime"],
        dim_g=num("dim_g"),
        rank_z=d["rank_z"],
        permutation=tuple(d["permutation"]),
        basis=basis,
        b0=tuple(b0),
        verdicts=tuple(verdicts),
        lower_raw=num("lower_raw"),
        upper=num("upper"),
        exact=d["exact"],
        ed=num("ed"),
        ed_red_upper=num("ed_red_upper"),
        ed_red_exact=d["ed_red_exact"],
        ed_red=num("ed_red"),
        hypothesis_failures=tuple(d["hypothesis_failures"]),
        caveats=tuple(d["caveats"]),
        n_extension=num("n_extension"),
    )
