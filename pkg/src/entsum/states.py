"""Pure multi-qubit states: construction, Haar sampling, catalog, file I/O.

Amplitude indexing is most-significant-qubit-first: the basis label
``|q0 q1 ... q_{n-1}>`` maps to the integer with ``q0`` as the top bit.
All named states are produced exactly normalized; files are renormalized
on load after a norm sanity check.
"""

from __future__ import annotations

import cmath
import json
import math
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import (
    ArityMismatch,
    InvalidArity,
    LengthMismatch,
    NormOutOfTolerance,
    ParseError,
    UnknownName,
    ZeroVector,
)

MAX_QUBITS = 10
FILE_NORM_TOL = 1e-6

__all__ = [
    "PureState",
    "from_amplitudes",
    "haar_random_state",
    "catalog_state",
    "catalog_names",
    "save_state",
    "load_state",
    "basis_index",
    "basis_label",
]


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector over the 2**n computational basis."""

    n: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise InvalidArity(f"qubit count {self.n} outside 1..{MAX_QUBITS}")
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise LengthMismatch(
                f"expected {1 << self.n} amplitudes for n={self.n}, got {amps.shape}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-12:
            raise NormOutOfTolerance(f"state norm {norm} is not 1; use from_amplitudes")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.n


def basis_index(label: str) -> int:
    """Map a bit-string label (qubit 0 first) to its amplitude index."""
    return int(label, 2)


def basis_label(index: int, n: int) -> str:
    return format(index, f"0{n}b")


def from_amplitudes(n: int, raw) -> PureState:
    """Normalize a raw length-2**n complex vector into a PureState."""
    amps = np.asarray(raw, dtype=np.complex128)
    if amps.shape != (1 << n,):
        raise LengthMismatch(f"expected {1 << n} amplitudes, got {amps.shape}")
    norm = np.linalg.norm(amps)
    if norm == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    return PureState(n=n, amplitudes=amps / norm)


def haar_random_state(n: int, rng: np.random.Generator) -> PureState:
    """Draw a Haar-distributed pure state of ``n`` qubits.

    All 2**(n+1) real components are independent standard normals; the
    normalized vector is then unitarily invariant.  Deterministic for a
    fixed generator state.
    """
    if not 1 <= n <= MAX_QUBITS:
        raise InvalidArity(f"qubit count {n} outside 1..{MAX_QUBITS}")
    dim = 1 << n
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return from_amplitudes(n, z)


# -- named-state catalog ------------------------------------------------

# The 32 basis labels of the six-qubit state whose coefficients are all
# +1 or -1 (times 1/sqrt(32)); 20 positive, 12 negative.
_PSI6QB_POSITIVE = [
    "000000", "111111", "000011", "111100", "000101", "111010",
    "000110", "111001", "001001", "110110", "001111", "110000",
    "010001", "101110", "010010", "101101", "011000", "100111",
    "011101", "100010",
]
_PSI6QB_NEGATIVE = [
    "001010", "110101", "001100", "110011", "010100", "101011",
    "010111", "101000", "011011", "100100", "011110", "100001",
]


def _ghz(n: int) -> PureState:
    if n < 2:
        raise InvalidArity("GHZ needs n >= 2")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = 1.0
    return from_amplitudes(n, amps)


def _w(n: int) -> PureState:
    if n < 3:
        raise InvalidArity("W needs n >= 3")
    amps = np.zeros(1 << n, dtype=np.complex128)
    for k in range(n):
        amps[1 << k] = 1.0
    return from_amplitudes(n, amps)


def _hs() -> PureState:
    # omega is the primitive cube root of unity.
    omega = cmath.exp(2j * math.pi / 3)
    amps = np.zeros(16, dtype=np.complex128)
    amps[basis_index("1100")] = amps[basis_index("0011")] = 1.0
    amps[basis_index("1001")] = amps[basis_index("0110")] = omega
    amps[basis_index("1010")] = amps[basis_index("0101")] = omega * omega
    return from_amplitudes(4, amps)


def _bssb5() -> PureState:
    # (1/2)[|001>|Phi-> + |010>|Psi-> + |100>|Phi+> + |111>|Psi+>]
    # with Psi+- = (|00> +- |11>)/sqrt2 and Phi+- = (|01> +- |10>)/sqrt2.
    pairs = {
        "001": [("01", 1.0), ("10", -1.0)],
        "010": [("00", 1.0), ("11", -1.0)],
        "100": [("01", 1.0), ("10", 1.0)],
        "111": [("00", 1.0), ("11", 1.0)],
    }
    amps = np.zeros(32, dtype=np.complex128)
    for head, bell in pairs.items():
        for tail, sign in bell:
            amps[basis_index(head + tail)] = sign
    return from_amplitudes(5, amps)


def _psi6qb() -> PureState:
    amps = np.zeros(64, dtype=np.complex128)
    for label in _PSI6QB_POSITIVE:
        amps[basis_index(label)] = 1.0
    for label in _PSI6QB_NEGATIVE:
        amps[basis_index(label)] = -1.0
    return from_amplitudes(6, amps)


def _bundled(name: str) -> PureState:
    with resources.as_file(resources.files("entsum.data") / name) as path:
        return load_state(path)


_FIXED_CATALOG = {
    "HS": _hs,
    "BSSB5": _bssb5,
    "PSI6QB": _psi6qb,
    "REN4": lambda: _bundled("ren4.state"),
    "VN7": lambda: _bundled("vn7.state"),
}

_PARAMETRIC_CATALOG = {"GHZ": _ghz, "W": _w}


def catalog_names() -> list[str]:
    return sorted(_FIXED_CATALOG) + [f"{k}(n)" for k in sorted(_PARAMETRIC_CATALOG)]


def catalog_state(name: str, n: int | None = None) -> PureState:
    """Return a named state.

    Parametric families take the qubit count either as the ``n`` argument
    or as an arity suffix (``GHZ3``, ``W5``).
    """
    key = name.strip().upper()
    if key in _FIXED_CATALOG:
        state = _FIXED_CATALOG[key]()
        if n is not None and n != state.n:
            raise ArityMismatch(f"{key} has {state.n} qubits, requested n={n}")
        return state
    match = re.fullmatch(r"([A-Z]+?)(\d+)?", key)
    family = match.group(1) if match else key
    if match and match.group(2) is not None:
        if n is not None and n != int(match.group(2)):
            raise InvalidArity(f"{name}: suffix disagrees with n={n}")
        n = int(match.group(2))
    if family in _PARAMETRIC_CATALOG:
        if n is None:
            raise InvalidArity(f"{family} needs a qubit count (e.g. {family}3)")
        return _PARAMETRIC_CATALOG[family](n)
    raise UnknownName(f"unknown catalog state {name!r}; known: {', '.join(catalog_names())}")


# -- file I/O -----------------------------------------------------------

_HEADER_RE = re.compile(r"qubits=(\d+)\s+ordering=msb-first")


def save_state(s: PureState, destination) -> None:
    """Write a state file (text or ``.json`` by extension)."""
    path = Path(destination)
    if path.suffix == ".json":
        entries = [
            {"k": int(k), "re": float(a.real), "im": float(a.imag)}
            for k, a in enumerate(s.amplitudes)
            if a != 0
        ]
        path.write_text(json.dumps({"n": s.n, "entries": entries}, indent=1) + "\n")
        return
    lines = [f"qubits={s.n} ordering=msb-first"]
    for k, a in enumerate(s.amplitudes):
        if a != 0:
            lines.append(f"{k} {a.real:.17g} {a.imag:.17g}")
    path.write_text("\n".join(lines) + "\n")


def _entries_to_state(n: int, entries, where: str) -> PureState:
    amps = np.zeros(1 << n, dtype=np.complex128)
    for k, re_part, im_part, line in entries:
        if not 0 <= k < (1 << n):
            raise ParseError(f"{where}:{line}: index {k} out of range for n={n}", line=line)
        if amps[k] != 0:
            raise ParseError(f"{where}:{line}: duplicate index {k}", line=line)
        amps[k] = complex(re_part, im_part)
    norm = np.linalg.norm(amps)
    if abs(norm - 1.0) > FILE_NORM_TOL:
        raise NormOutOfTolerance(f"{where}: raw norm {norm} deviates from 1 by more than {FILE_NORM_TOL}")
    return from_amplitudes(n, amps)


def load_state(source) -> PureState:
    """Parse a state file written by :func:`save_state` (text or JSON)."""
    path = Path(source)
    if path.suffix == ".json":
        try:
            doc = json.loads(path.read_text())
            n = int(doc["n"])
            entries = [
                (int(e["k"]), float(e["re"]), float(e["im"]), i + 1)
                for i, e in enumerate(doc["entries"])
            ]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"{path}: {exc}") from exc
        return _entries_to_state(n, entries, str(path))
    n = None
    entries = []
    for lineno, rawline in enumerate(path.read_text().splitlines(), start=1):
        line = rawline.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            match = _HEADER_RE.fullmatch(line)
            if not match:
                raise ParseError(
                    f"{path}:{lineno}: expected header 'qubits=<n> ordering=msb-first'",
                    line=lineno,
                )
            n = int(match.group(1))
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"{path}:{lineno}: expected '<index> <re> <im>'", line=lineno)
        try:
            entries.append((int(parts[0]), float(parts[1]), float(parts[2]), lineno))
        except ValueError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}", line=lineno) from exc
    if n is None:
        raise ParseError(f"{path}: missing header line")
    return _entries_to_state(n, entries, str(path))
