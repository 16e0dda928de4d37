"""Per-axiom validation reports with counterexample witnesses."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Witness:
    basis_tuple: tuple
    lhs: tuple
    rhs: tuple


@dataclass(frozen=True)
class AxiomCheck:
    tag: str
    ok: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    entries: tuple

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failing_tags(self):
        return [e.tag for e in self.entries if not e.ok]

    def passing_tags(self):
        return [e.tag for e in self.entries if e.ok]

    def to_json_obj(self):
        out = []
        for e in self.entries:
            item = {
                "subject": self.subject,
                "axiom_tag": e.tag,
                "status": "pass" if e.ok else "fail",
            }
            if e.witness is not None:
                item["witness"] = {
                    "basis_tuple": list(e.witness.basis_tuple),
                    "lhs": [str(a) for a in e.witness.lhs],
                    "rhs": [str(a) for a in e.witness.rhs],
                }
            out.append(item)
        return out

    def to_text(self):
        lines = []
        for e in self.entries:
            if e.ok:
                lines.append(f"{self.subject}: {e.tag}: pass")
            else:
                w = e.witness
                lines.append(
                    f"{self.subject}: {e.tag}: fail at {w.basis_tuple} "
                    f"lhs={list(w.lhs)} rhs={list(w.rhs)}"
                )
        return "\n".join(lines)


def sweep(tag: str, dims, law) -> AxiomCheck:
    """Check `law` over all basis index tuples, in lexicographic order.

    `law(*indices)` returns an (lhs, rhs) vector pair; the first mismatch
    becomes the witness.
    """
    for idx in itertools.product(*(range(d) for d in dims)):
        lhs, rhs = law(*idx)
        if lhs != rhs:
            return AxiomCheck(tag, False, Witness(idx, tuple(lhs), tuple(rhs)))
    return AxiomCheck(tag, True)


def merge(subject: str, *parts) -> ValidationReport:
    entries = []
    for p in parts:
        if isinstance(p, AxiomCheck):
            entries.append(p)
        elif isinstance(p, ValidationReport):
            entries.extend(p.entries)
        else:
            entries.extend(p)
    return ValidationReport(subject, tuple(entries))
