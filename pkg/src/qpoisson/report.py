"""Matrix files in, deterministic reports out."""

import json
from dataclasses import asdict, dataclass, field

from .algebra import InvalidMatrixError, validate_skew
from .complexes import (
    koszul_complex, hochschild_cochain_complex, poisson_chain_complex,
    poisson_cochain_complex, pchain_label, qchain_label, qcochain_label,
)
from .engine import betti_table
from . import poisson as pm
from . import quantum as qm
from .verify import run_suite


class InputError(ValueError):
    """Unreadable or malformed matrix file."""


def load_matrix(path):
    """Read ``{"n": int, "a": [[int]]}`` and return a :class:`SkewMatrix`."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    return parse_matrix(doc)


def parse_matrix(doc):
    if not isinstance(doc, dict) or "a" not in doc or "n" not in doc:
        raise InputError('matrix file must be an object with keys "n" and "a"')
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f'"n" must be a positive integer, got {n!r}')
    try:
        A = validate_skew(doc["a"])
    except InvalidMatrixError as exc:
        raise InputError(str(exc)) from None
    if A.n != n:
        raise InputError(f'"n" is {n} but "a" has {A.n} rows')
    return A


KINDS = {
    "ph": ("HP_*(R,M)", poisson_chain_complex),
    "pcoh": ("HP^*(R)", poisson_cochain_complex),
    "hh": ("HH_*(U,σU)", koszul_complex),
    "hcoh": ("HH^*(U,U)", hochschild_cochain_complex),
}


def _closed_form(kind, A, k, bound):
    if kind == "ph":
        return [pchain_label(b) for b in pm.hp_basis(A, k, bound)]
    if kind == "pcoh":
        return [pchain_label(b) for b in pm.hp_cohomology_basis(A, k, bound)]
    if kind == "hh":
        return [qchain_label(b) for b in qm.twisted_hh_basis(A, k, bound)]
    return [qcochain_label(b) for b in qm.hh_cohomology_basis(A, k, bound)]


def _vector_str(spec, vec):
    parts = []
    for b, c in vec.items():
        label = spec.label(b)
        s = str(c)
        if s == "1":
            parts.append(label)
        elif s == "-1":
            parts.append(f"-{label}")
        elif s.lstrip("-").isdigit():
            parts.append(f"{s}*{label}")
        else:
            parts.append(f"({s})*{label}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass
class Report:
    matrix: list
    max_degree: int
    kind: str
    title: str = ""
    betti: list = field(default_factory=list)
    totals: list = field(default_factory=list)
    closed_form: dict = field(default_factory=dict)
    closed_form_side: str = ""
    representatives: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    seed: int = None

    @property
    def passed(self):
        return all(c["passed"] for c in self.checks)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["closed_form"] = {str(k): v for k, v in d.get("closed_form", {}).items()}
        return cls(**d)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_table(self):
        n = len(self.matrix)
        lines = [f"{self.kind}: {self.title}", f"matrix: {self.matrix}",
                 f"max degree: {self.max_degree}"]
        if self.kind == "verify":
            lines.append(f"seed: {self.seed}")
            for c in self.checks:
                mark = "PASS" if c["passed"] else "FAIL"
                line = f"  [{mark}] {c['name']} ({c['cases']} cases)"
                if c["witness"]:
                    line += f"\n         counterexample: {c['witness']}"
                lines.append(line)
            return "\n".join(lines) + "\n"
        lines.append("")
        lines.append(f"{'degree':<{4 * n + 6}}{'index':>6}{'dim':>6}")
        for row in self.betti:
            deg = "(" + ", ".join(str(x) for x in row["degree"]) + ")"
            lines.append(f"{deg:<{4 * n + 6}}{row['index']:>6}{row['dim']:>6}")
        lines.append("")
        lines.append("totals by index: " + ", ".join(str(t) for t in self.totals))
        side = f" ({self.closed_form_side})" if self.closed_form_side else ""
        lines.append(f"closed-form bases{side}:")
        for k in sorted(self.closed_form, key=int):
            lines.append(f"  k={k}: {{" + ", ".join(self.closed_form[k]) + "}")
        if self.representatives:
            lines.append("engine representatives:")
            for r in self.representatives:
                deg = "(" + ", ".join(str(x) for x in r["degree"]) + ")"
                lines.append(f"  {deg} k={r['index']}: " + "; ".join(r["vectors"]))
        return "\n".join(lines) + "\n"


def homology_report(kind, A, bound, representatives=False):
    title, build = KINDS[kind]
    spec = build(A)
    table = betti_table(spec, bound, with_representatives=representatives)
    betti = [{"degree": list(deg), "index": k, "dim": d}
             for (deg, k), d in table.dims.items()]
    reps = [{"degree": list(deg), "index": k, "vectors": [_vector_str(spec, v) for v in vecs]}
            for (deg, k), vecs in table.reps.items()]
    closed = {str(k): _closed_form(kind, A, k, bound) for k in range(A.n + 1)}
    side = "homology side of the duality, X^alpha dX^beta with |beta| = n - k" \
        if kind == "pcoh" else ""
    return Report(A.to_lists(), bound, kind, title, betti, table.totals(A.n), closed, side, reps)


def verify_report(A, bound, seed=0):
    checks = [r.to_dict() for r in run_suite(A, bound, seed)]
    return Report(A.to_lists(), bound, "verify", "identity suite", checks=checks, seed=seed)
