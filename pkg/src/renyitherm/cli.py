"""Command-line front end.

Input is one JSON document holding exactly one payload::

    {"probabilities": [...]}
    {"energies": [...]}
    {"matrix": {"re": [[...]], "im": [[...]]}}

with optional ``"temp0"`` and ``"label"`` keys. Exit codes: 0 success,
1 I/O failure, 2 validation failure, 3 identity violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .distributions import ProbDist, make_dist
from .entropy import EntropyOrder, renyi
from .errors import DegenerateOrder, ValidationError
from .qcalc import Q_ONE_THRESHOLD, free_energy_secant, relation_check
from .spectral import HermitianOperator, validate_density
from .thermo import (
    EnergySpectrum,
    embed_distribution,
    free_energy,
    gibbs_state,
    gibbs_state_quantum,
    von_neumann_from_temperature,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_IDENTITY = 3

PAYLOAD_KEYS = ("probabilities", "energies", "matrix")


class InputError(ValidationError):
    invariant = "input document"


@dataclass
class InputDocument:
    probabilities: Optional[list] = None
    energies: Optional[list] = None
    matrix: Optional[np.ndarray] = None
    temp0: Optional[float] = None
    label: Optional[str] = None

    @property
    def kind(self) -> str:
        for key in PAYLOAD_KEYS:
            if getattr(self, key) is not None:
                return key
        raise InputError("document has no payload")

    @classmethod
    def from_json(cls, obj) -> "InputDocument":
        if not isinstance(obj, dict):
            raise InputError("input document must be a JSON object")
        present = [k for k in PAYLOAD_KEYS if k in obj]
        if len(present) != 1:
            raise InputError(f"document must hold exactly one of {', '.join(PAYLOAD_KEYS)}; found {present or 'none'}")
        doc = cls(temp0=obj.get("temp0"), label=obj.get("label"))
        if doc.temp0 is not None:
            doc.temp0 = float(doc.temp0)
        key = present[0]
        if key == "matrix":
            m = obj["matrix"]
            if not isinstance(m, dict) or "re" not in m:
                raise InputError('matrix payload needs "re" (and optionally "im")')
            re_ = np.array(m["re"], dtype=float)
            im = np.array(m.get("im", np.zeros_like(re_)), dtype=float)
            if re_.ndim != 2 or re_.shape[0] != re_.shape[1] or re_.shape != im.shape:
                raise InputError(f"matrix re/im must be square and the same shape, got {re_.shape} and {im.shape}")
            doc.matrix = re_ + 1j * im
        else:
            values = obj[key]
            if not isinstance(values, list) or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in values):
                raise InputError(f'"{key}" must be a list of numbers')
            setattr(doc, key, [float(v) for v in values])
        return doc

    def to_json(self) -> dict:
        out = {}
        if self.probabilities is not None:
            out["probabilities"] = list(self.probabilities)
        elif self.energies is not None:
            out["energies"] = list(self.energies)
        elif self.matrix is not None:
            out["matrix"] = {"re": self.matrix.real.tolist(), "im": self.matrix.imag.tolist()}
        if self.temp0 is not None:
            out["temp0"] = self.temp0
        if self.label is not None:
            out["label"] = self.label
        return out


def fmt(x: float) -> str:
    """Twelve significant digits, trailing zeros kept."""
    x = float(x)
    if x == 0:
        return "0.000000000000"
    return f"{x:#.12g}"


def parse_range(text: str) -> tuple[float, float, int]:
    try:
        lo, hi, count = text.split(":")
        lo, hi, count = float(lo), float(hi), int(count)
    except ValueError:
        raise InputError(f"range must look like lo:hi:count, got {text!r}") from None
    if not (lo < hi) or count < 2:
        raise InputError(f"range needs lo < hi and count >= 2, got {text!r}")
    return lo, hi, count


def read_document(path: str) -> InputDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    return InputDocument.from_json(obj)


def write_document(doc: InputDocument, out) -> None:
    json.dump(doc.to_json(), out)
    out.write("\n")


def _temp0(args, doc) -> float:
    if args.temp0 is not None:
        return args.temp0
    if doc.temp0 is not None:
        return doc.temp0
    return 1.0


def _system(doc: InputDocument, temp0: float, strict: bool):
    """Energy levels (or Hamiltonian) described by the document."""
    if doc.kind == "probabilities":
        return embed_distribution(make_dist(doc.probabilities, strict=strict), temp0)
    if doc.kind == "energies":
        return EnergySpectrum(doc.energies)
    return EnergySpectrum.from_hamiltonian(HermitianOperator(doc.matrix))


def cmd_entropy(args, doc, out) -> int:
    if doc.kind == "probabilities":
        p = make_dist(doc.probabilities, strict=args.strict)
    elif doc.kind == "matrix":
        p = validate_density(HermitianOperator(doc.matrix), strict=args.strict)
    else:
        raise InputError("entropy needs a probabilities or matrix payload")
    print(fmt(renyi(p, EntropyOrder.of(args.q))), file=out)
    return EXIT_OK


def cmd_relation(args, doc, out) -> int:
    if doc.kind == "matrix":
        raise InputError("relation needs a probabilities or energies payload")
    temp0 = _temp0(args, doc)
    report = relation_check(_system(doc, temp0, args.strict), temp0, float(args.q))
    for key, value in report.as_dict().items():
        print(f"{key}={fmt(value)}", file=out)
    if not abs(report.residual) <= args.tol:
        print(f"identity violated: |residual| = {abs(report.residual):.3g} > {args.tol}", file=sys.stderr)
        return EXIT_IDENTITY
    return EXIT_OK


def _sweep_rows(args, doc):
    lo, hi, count = parse_range(args.range)
    if lo <= 0:
        raise InputError(f"sweep range must be positive, got lo={lo!r}")
    temp0 = _temp0(args, doc)
    system = _system(doc, temp0, args.strict)
    grid = np.linspace(lo, hi, count)
    if args.mode == "q":
        header = ["q", "T", "S_q", "rhs", "residual"]
        p0 = gibbs_state(system, temp0)
        rows = []
        for q in grid:
            s = renyi(p0, q)
            T = temp0 / q
            # at q = 1 the secant degenerates to its tangent limit
            rhs = s if abs(q - 1) <= Q_ONE_THRESHOLD else free_energy_secant(system, temp0, T)
            rows.append([q, T, s, rhs, s - rhs])
    else:
        header = ["T", "lnZ", "F", "tangent", "secant"]
        rows = []
        tangent0 = von_neumann_from_temperature(system, temp0)
        for T in grid:
            point = free_energy(system, T)
            secant = tangent0 if T == temp0 else free_energy_secant(system, temp0, T)
            rows.append([T, point.lnZ, point.F, von_neumann_from_temperature(system, T), secant])
    return header, rows


def cmd_sweep(args, doc, out) -> int:
    header, rows = _sweep_rows(args, doc)
    for row in rows:
        if not all(math.isfinite(v) for v in row):
            raise ValidationError(f"non-finite value in sweep row at {row[0]!r}")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) for v in row])
    return EXIT_OK


def cmd_embed(args, doc, out) -> int:
    if doc.kind != "probabilities":
        raise InputError("embed needs a probabilities payload")
    temp0 = _temp0(args, doc)
    e = embed_distribution(make_dist(doc.probabilities, strict=args.strict), temp0)
    write_document(InputDocument(energies=e.levels.tolist(), temp0=temp0, label=doc.label), out)
    return EXIT_OK


def cmd_gibbs(args, doc, out) -> int:
    if doc.kind == "energies":
        p = gibbs_state(EnergySpectrum(doc.energies), args.temp)
        result = InputDocument(probabilities=p.weights.tolist(), label=doc.label)
    elif doc.kind == "matrix":
        rho = gibbs_state_quantum(HermitianOperator(doc.matrix), args.temp)
        result = InputDocument(matrix=np.array(rho.entries), label=doc.label)
    else:
        raise InputError("gibbs needs an energies or matrix payload")
    write_document(result, out)
    return EXIT_OK


def cmd_free_energy(args, doc, out) -> int:
    if doc.kind == "probabilities":
        raise InputError("free-energy needs an energies or matrix payload")
    point = free_energy(_system(doc, 1.0, args.strict), args.temp)
    print(f"T={fmt(point.T)}", file=out)
    print(f"F={fmt(point.F)}", file=out)
    print(f"lnZ={fmt(point.lnZ)}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="renyitherm", description="Renyi entropy, Gibbs states and free energy (nats, k_B = 1).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help='JSON document path, or "-" for standard input')
        p.add_argument("--strict", action="store_true", help="reject unnormalized probabilities / density matrices")
        p.set_defaults(func=func)
        return p

    p = add("entropy", cmd_entropy, "Renyi entropy of a distribution or density matrix")
    p.add_argument("--q", required=True, help='order: a number, "0", "1" or "inf"')

    p = add("relation", cmd_relation, "check S_q(T0) = -(F(T0/q) - F(T0)) / (T0/q - T0)")
    p.add_argument("--q", required=True, type=float)
    p.add_argument("--temp0", type=float)
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("sweep", cmd_sweep, "CSV sweep over order q or temperature T")
    p.add_argument("--mode", choices=("q", "T"), required=True)
    p.add_argument("--range", required=True, help="lo:hi:count")
    p.add_argument("--temp0", type=float)

    p = add("embed", cmd_embed, "energies -T0 ln p_i whose Gibbs state at T0 is p")
    p.add_argument("--temp0", type=float)

    p = add("gibbs", cmd_gibbs, "Gibbs state at a temperature")
    p.add_argument("--temp", required=True, type=float)

    p = add("free-energy", cmd_free_energy, "free energy and log partition function")
    p.add_argument("--temp", required=True, type=float)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        doc = read_document(args.input)
        return args.func(args, doc, out)
    except OSError as exc:
        print(f"renyitherm: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except DegenerateOrder as exc:
        print(f"renyitherm: degenerate order: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValidationError, ValueError) as exc:
        name = getattr(exc, "invariant", "invalid input")
        print(f"renyitherm: {type(exc).__name__} ({name}): {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
