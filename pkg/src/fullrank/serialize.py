"""JSON (de)serialization for matrices, signals, measurements,
certificates and reports.

Matrix schema: {"m": int, "d": int, "k": int|null, "modulus": int|null,
"entries": [row-major ints], "scalings": [ints]|null}. Rationals are
"p/q" strings so files stay exact and diff-friendly.
"""

import json
from fractions import Fraction

from .construct import ConstructionParams
from .cover import CoverInstance
from .linalg import IntMatrix
from .recover import Measurement, SparseSignal
from .verify import DegeneracyCertificate, VerificationReport


def rational_to_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def rational_from_str(s) -> Fraction:
    # Fraction("3/10"), Fraction("-2"), Fraction("0.3") are all exact
    return Fraction(str(s).strip())


def matrix_to_dict(A: IntMatrix, params: ConstructionParams | None = None) -> dict:
    scalings = list(params.scalings) if params and params.scalings else None
    return {
        "m": A.rows,
        "d": A.cols,
        "k": A.entry_bound,
        "modulus": A.modulus,
        "entries": list(A.entries),
        "scalings": scalings,
    }


def matrix_from_dict(obj: dict) -> tuple[IntMatrix, list[int] | None]:
    try:
        matrix = IntMatrix(
            rows=int(obj["m"]),
            cols=int(obj["d"]),
            entries=tuple(int(e) for e in obj["entries"]),
            modulus=obj.get("modulus"),
            entry_bound=obj.get("k"),
        )
    except KeyError as exc:
        raise ValueError(f"matrix JSON missing field {exc}") from exc
    scalings = obj.get("scalings")
    return matrix, (None if scalings is None else [int(x) for x in scalings])


def matrix_to_csv(A: IntMatrix) -> str:
    return "\n".join(",".join(str(x) for x in A.row(i)) for i in range(A.rows)) + "\n"


def signal_to_dict(x: SparseSignal) -> dict:
    return {"d": x.dimension, "support": list(x.support), "values": list(x.values)}


def signal_from_dict(obj: dict) -> SparseSignal:
    try:
        return SparseSignal(
            dimension=int(obj["d"]),
            support=tuple(int(i) for i in obj["support"]),
            values=tuple(int(v) for v in obj["values"]),
        )
    except KeyError as exc:
        raise ValueError(f"signal JSON missing field {exc}") from exc


def measurement_to_dict(meas: Measurement) -> dict:
    return {
        "b": [rational_to_str(x) for x in meas.b],
        "noise": [rational_to_str(x) for x in meas.noise],
        "noise_bound": rational_to_str(meas.noise_bound),
    }


def measurement_from_dict(obj: dict) -> Measurement:
    try:
        return Measurement(
            b=tuple(rational_from_str(x) for x in obj["b"]),
            noise=tuple(rational_from_str(x) for x in obj.get("noise", [])),
            noise_bound=rational_from_str(obj.get("noise_bound", "1/2")),
        )
    except KeyError as exc:
        raise ValueError(f"measurement JSON missing field {exc}") from exc


def certificate_to_dict(cert: DegeneracyCertificate) -> dict:
    return {"t": cert.t, "coeffs": list(cert.coeffs), "columns": list(cert.columns)}


def certificate_from_dict(obj: dict) -> DegeneracyCertificate:
    try:
        return DegeneracyCertificate(
            t=int(obj["t"]),
            coeffs=tuple(int(c) for c in obj["coeffs"]),
            columns=tuple(int(c) for c in obj["columns"]),
        )
    except KeyError as exc:
        raise ValueError(f"certificate JSON missing field {exc}") from exc


def report_to_dict(rep: VerificationReport) -> dict:
    return {
        "total_checked": rep.total_checked,
        "failures": [list(f) for f in rep.failures],
        "mode": rep.mode,
        "arithmetic": rep.arithmetic,
        "seed": rep.seed,
        "trials": rep.trials,
        "ok": rep.ok,
    }


def normals_from_obj(obj, m: int | None = None) -> list[tuple[int, ...]]:
    """Parse a JSON list of integer normal vectors."""
    if not isinstance(obj, list):
        raise ValueError("normals JSON must be a list of integer vectors")
    normals = [tuple(int(x) for x in n) for n in obj]
    if m is not None and any(len(n) != m for n in normals):
        raise ValueError(f"every normal must have length {m}")
    return normals


def cover_to_dict(inst: CoverInstance) -> dict:
    return {"m": inst.m, "k": inst.k, "normals": [list(n) for n in inst.normals]}


def save_json(path: str, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
