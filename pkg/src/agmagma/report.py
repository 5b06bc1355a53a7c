"""Full analysis of one magma as a JSON-serialisable report, plus DOT output."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Any

from . import congruences as cg
from .core import Magma
from .ideals_green import Green, green, hclass_order
from .inverses import inverse_profile
from .laws import LawId, check_identity, classify, idempotents, is_completely_inverse, label_names


def not_applicable(reason: str) -> str:
    return f"not applicable: {reason}"


def blocks(p) -> list:
    return p.blocks()


@dataclass
class Report:
    input: str
    order: int
    labels: list
    laws: dict
    idempotents: list
    inverse_profile: dict
    green: dict
    h_order: list
    congruence_count: Any
    congruences: Any
    extremal: Any
    lallement: Any
    kernel: Any
    sigma: Any
    subdirect: Any

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(**{f.name: data[f.name] for f in fields(cls)})

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def _congruence_entry(m: Magma, rho) -> dict:
    flags = cg.classify_congruence(m, rho)
    return {"blocks": blocks(rho.partition), **asdict(flags)}


def _lallement_table(m: Magma, congs) -> list:
    t = m.table
    out = []
    for rho in congs:
        rows = []
        for block in rho.blocks():
            a = block[0]
            if rho.related(a, t[a][a]):
                rows.append({"block": block, "a": a,
                             "witness": cg.lallement_witness(m, rho, a)})
        out.append({"congruence": blocks(rho.partition), "idempotent_blocks": rows})
    return out


def analyze(m: Magma, name: str = "<inline>", max_congruence_order: int = cg.ALL_CONGRUENCES_MAX_ORDER) -> Report:
    labels = classify(m)
    laws = {}
    for law in LawId:
        res = check_identity(m, law)
        laws[law.value] = {"holds": res.holds,
                           "counterexample": list(res.counterexample) if res.counterexample else None}
    partitions = {rel.value: blocks(green(m, rel)) for rel in Green}

    congs = None
    if m.order <= max_congruence_order:
        congs = cg.all_congruences(m)
        congruence_count = len(congs)
        congruence_list = [_congruence_entry(m, rho) for rho in congs]
    else:
        congruence_count = not_applicable(f"order {m.order} exceeds {max_congruence_order}")
        congruence_list = congruence_count

    ci = is_completely_inverse(m)
    if not ci:
        reason = not_applicable("not a completely inverse AG**-groupoid")
        extremal = lallement = kernel = sigma = subdirect = reason
    else:
        ext = cg.extremal_congruences(m, certify=congs is not None)
        extremal = {"least_semilattice": blocks(ext.least_semilattice.partition),
                    "max_idempotent_separating": blocks(ext.max_idempotent_separating.partition),
                    "certified": ext.certified}
        lallement = (_lallement_table(m, congs) if congs is not None
                     else not_applicable("congruence list unavailable above the order guard"))
        if cg.semilattice_zero(m) is None:
            kernel = sigma = subdirect = not_applicable("idempotents have no zero")
        else:
            k = cg.kernel(m)
            kernel = {"idempotent": k.idempotent, "elements": sorted(k.elements),
                      "phi": [k.image(a) for a in m.elements]}
            s = cg.sigma(m)
            sigma = blocks(s.partition)
            sd = cg.subdirect_check(m)
            subdirect = {"holds": sd.holds, "sigma": blocks(sd.sigma.partition),
                         "rees": blocks(sd.rees.partition)}

    return Report(
        input=name,
        order=m.order,
        labels=label_names(labels),
        laws=laws,
        idempotents=sorted(idempotents(m)),
        inverse_profile=inverse_profile(m).as_dict(),
        green=partitions,
        h_order=[list(e) for e in hclass_order(m)],
        congruence_count=congruence_count,
        congruences=congruence_list,
        extremal=extremal,
        lallement=lallement,
        kernel=kernel,
        sigma=sigma,
        subdirect=subdirect,
    )


def format_text(r: Report) -> str:
    out = [f"input: {r.input} (order {r.order})",
           "labels: " + (", ".join(r.labels) if r.labels else "(none)")]
    out.append("laws:")
    for name, res in r.laws.items():
        status = "holds" if res["holds"] else f"fails at {tuple(res['counterexample'])}"
        out.append(f"  {name}: {status}")
    out.append(f"idempotents: {r.idempotents}")
    ip = r.inverse_profile
    out.append(f"inverses: regular={ip['regular']} unique={ip['unique']} "
               f"completely_inverse={ip['completely_inverse']}")
    out.append("  V(a): " + "; ".join(f"{a}->{v}" for a, v in enumerate(ip["inverse_sets"])))
    for rel, bl in r.green.items():
        out.append(f"green {rel}: {_fmt(bl)}")
    out.append(f"H-class covers: {r.h_order}")
    out.append(f"congruences: {r.congruence_count}")
    if isinstance(r.congruences, list):
        for c in r.congruences:
            flags = [k for k in ("semilattice", "idempotent_separating", "ag_group") if c[k]]
            out.append(f"  {_fmt(c['blocks'])} {' '.join(flags)}")
    for key in ("extremal", "kernel", "sigma", "subdirect"):
        val = getattr(r, key)
        if isinstance(val, list) and val and isinstance(val[0], list):
            val = _fmt(val)
        out.append(f"{key}: {val}")
    if isinstance(r.lallement, list):
        out.append("lallement witnesses:")
        for entry in r.lallement:
            ws = ", ".join(f"{row['a']}->{row['witness']}" for row in entry["idempotent_blocks"])
            out.append(f"  {_fmt(entry['congruence'])}: {ws}")
    else:
        out.append(f"lallement: {r.lallement}")
    return "\n".join(out) + "\n"


def _fmt(bl) -> str:
    return "[" + ",".join("[" + ",".join(map(str, b)) + "]" for b in bl) + "]"


def hclass_dot(m: Magma) -> str:
    h = green(m, Green.H)
    es = idempotents(m)
    lines = ["digraph hclasses {", "  rankdir=BT;"]
    for block in h.blocks():
        label = next((e for e in block if e in es), None)
        text = f"e={label}" if label is not None else f"H{block[0]}"
        lines.append(f'  h{block[0]} [label="{text} {{{",".join(map(str, block))}}}"];')
    for lo, hi in hclass_order(m):
        lines.append(f"  h{lo} -> h{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def congruence_lattice_dot(m: Magma) -> str:
    congs = cg.all_congruences(m)
    parts = [c.partition for c in congs]
    lines = ["digraph congruences {", "  rankdir=BT;"]
    for i, p in enumerate(parts):
        lines.append(f'  c{i} [label="{p}"];')
    for i, p in enumerate(parts):
        for j, q in enumerate(parts):
            if i == j or p == q or not p.refines(q):
                continue
            covered = not any(k not in (i, j) and r != p and r != q and p.refines(r) and r.refines(q)
                              for k, r in enumerate(parts))
            if covered:
                lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
