"""Dense complex matrix substrate: validated unitaries, block views, F-conjugation.

Conventions used throughout the package:

* matrices are dense ``complex128`` numpy arrays, row-major;
* the top circuit wire corresponds to the most significant bit of the
  row/column index, so block row 0 of a split matrix is the subspace where
  the top wire is in state ``|0>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .exceptions import NotUnitaryError, OddDimensionError, ShapeMismatchError

DEFAULT_UNITARITY_TOL = 1e-10


def as_array(m) -> np.ndarray:
    """Coerce a UnitaryMatrix or array-like to a complex128 ndarray."""
    if isinstance(m, UnitaryMatrix):
        return m.entries
    return np.asarray(m, dtype=complex)


def _frozen(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=complex, order="C")
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class UnitaryMatrix:
    """A validated square unitary matrix.

    ``unitarity_residual`` caches ``||U^dag U - I||_F`` as measured at
    construction time; ``validate`` raises when it exceeds the tolerance.
    """

    entries: np.ndarray
    unitarity_residual: float

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def validate(cls, m, tol: float = DEFAULT_UNITARITY_TOL) -> "UnitaryMatrix":
        """Wrap an array as a UnitaryMatrix, checking unitarity to ``tol``."""
        if isinstance(m, UnitaryMatrix):
            if m.unitarity_residual <= tol:
                return m
            m = m.entries
        a = np.asarray(m, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ShapeMismatchError(f"expected a square matrix, got shape {a.shape}")
        n = a.shape[0]
        residual = float(np.linalg.norm(a.conj().T @ a - np.eye(n)))
        if not np.isfinite(residual) or residual > tol:
            raise NotUnitaryError(
                f"matrix is not unitary: ||U^dag U - I||_F = {residual:.3e} > {tol:.1e}"
            )
        return cls(_frozen(a), residual)

    @classmethod
    def identity(cls, n: int) -> "UnitaryMatrix":
        return cls(_frozen(np.eye(n)), 0.0)

    @classmethod
    def hadamard(cls) -> "UnitaryMatrix":
        """The 2x2 Hadamard matrix H."""
        h = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)
        return cls.validate(h, tol=1e-15)

    @classmethod
    def f_matrix(cls, n: int) -> "UnitaryMatrix":
        """The n x n block Hadamard F = (1/sqrt 2) [[I, I], [I, -I]] = H (x) I."""
        if n % 2:
            raise OddDimensionError(f"F is defined for even dimension, got {n}")
        i = np.eye(n // 2)
        f = np.block([[i, i], [i, -i]]) / np.sqrt(2.0)
        return cls.validate(f, tol=1e-12)


@dataclass(frozen=True)
class BlockView:
    """The four contiguous quadrants of an even-dimension matrix."""

    u11: np.ndarray
    u12: np.ndarray
    u21: np.ndarray
    u22: np.ndarray


def block_split(u) -> BlockView:
    """Split a matrix into its four (n/2) x (n/2) quadrants.

    ``u11`` is rows/cols [0, n/2); reassembling with :func:`block_assemble`
    reproduces the input bitwise.
    """
    a = as_array(u)
    n = a.shape[0]
    if n % 2:
        raise OddDimensionError(f"cannot block-split a matrix of odd dimension {n}")
    h = n // 2
    return BlockView(
        _frozen(a[:h, :h]), _frozen(a[:h, h:]), _frozen(a[h:, :h]), _frozen(a[h:, h:])
    )


def block_assemble(b: BlockView) -> np.ndarray:
    """Reassemble four equal-size square blocks into one matrix."""
    shapes = {m.shape for m in (b.u11, b.u12, b.u21, b.u22)}
    if len(shapes) != 1 or any(s[0] != s[1] for s in shapes):
        raise ShapeMismatchError(f"blocks must be square and equal-size, got {shapes}")
    return np.block([[b.u11, b.u12], [b.u21, b.u22]])


def hadamard_conjugate(u) -> np.ndarray:
    """Return F U F with F = (1/sqrt 2) [[I, I], [I, -I]].

    F is self-inverse, so this conjugation is an involution.  Computed
    blockwise rather than via two matrix products.
    """
    b = block_split(u)
    s11 = 0.5 * (b.u11 + b.u12 + b.u21 + b.u22)
    s12 = 0.5 * (b.u11 - b.u12 + b.u21 - b.u22)
    s21 = 0.5 * (b.u11 + b.u12 - b.u21 - b.u22)
    s22 = 0.5 * (b.u11 - b.u12 - b.u21 + b.u22)
    return np.block([[s11, s12], [s21, s22]])


def frobenius_distance(x, y) -> float:
    """Frobenius norm of X - Y; zero iff the two matrices are equal."""
    a, b = as_array(x), as_array(y)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


# --- matrix text format -----------------------------------------------------
#
# line 1: integer n
# optional: "scale p/q" (rational prefactor applied to every entry)
# then n lines of n whitespace-separated complex entries, "a+bi" / "a-bi"
# (decimal, optional exponent); '#' starts a comment line.

_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_ENTRY_RE = re.compile(
    rf"^(?:(?P<re>{_NUM})(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i"
    rf"|(?P<im_only>{_NUM})i"
    rf"|(?P<re_only>{_NUM}))$"
)


def parse_complex(token: str) -> complex:
    """Parse one matrix entry: 'a+bi', 'a-bi', bare real, or bare imaginary."""
    m = _ENTRY_RE.match(token)
    if m is None:
        raise ValueError(f"malformed complex entry {token!r}")
    if m.group("re") is not None:
        return complex(float(m.group("re")), float(m.group("im")))
    if m.group("im_only") is not None:
        return complex(0.0, float(m.group("im_only")))
    return complex(float(m.group("re_only")), 0.0)


def format_complex(z: complex, precision: int | None = None) -> str:
    """Format a complex number as 'a+bi'; full precision unless given."""
    if precision is None:
        return f"{z.real:.17g}{z.imag:+.17g}i"
    return f"{z.real:.{precision}f}{z.imag:+.{precision}f}i"


def parse_matrix_text(text: str) -> np.ndarray:
    """Parse the matrix text format into a complex array (scale applied)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the dimension, got {lines[0]!r}") from None
    if n <= 0:
        raise ValueError(f"dimension must be positive, got {n}")
    rows = lines[1:]
    scale = Fraction(1)
    while rows and rows[0].startswith("scale"):
        _, _, frac = rows[0].partition(" ")
        try:
            scale *= Fraction(frac.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed scale line {rows[0]!r}") from None
        rows = rows[1:]
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, got {len(rows)}")
    out = np.empty((n, n), dtype=complex)
    for i, row in enumerate(rows):
        tokens = row.split()
        if len(tokens) != n:
            raise ValueError(f"row {i} has {len(tokens)} entries, expected {n}")
        out[i] = [parse_complex(t) for t in tokens]
    return out * float(scale)


def write_matrix_text(m, precision: int | None = None) -> str:
    """Serialize a matrix in the text format (no scale line)."""
    a = as_array(m)
    lines = [str(a.shape[0])]
    for row in a:
        lines.append(" ".join(format_complex(z, precision) for z in row))
    return "\n".join(lines) + "\n"


def read_matrix_file(path) -> np.ndarray:
    return parse_matrix_text(Path(path).read_text())
