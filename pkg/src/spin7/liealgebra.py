"""Eight-dimensional Lie algebras on an invariant frame.

Structure constants are stored as c[i, j, k] = c^k_{ij} with
[e_i, e_j] = sum_k c^k_{ij} e_k.  Loaders accept either bracket constants
or structure-equation coefficients; the two are related by
de^k(e_i, e_j) = -c^k_{ij}, so a structure-equation entry "de_k contains
c * e_ij" stores c^k_{ij} = -c.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .forms import DIM, KForm, wedge

JACOBI_TOL = 1e-12

_SCALAR_RE = re.compile(r"^[0-9a-z+\-*/(). ]+$")
_SCALAR_NAMES = {"sqrt": math.sqrt, "pi": math.pi}


def parse_scalar(value) -> float:
    """Parse a scalar that may be exact text like "sqrt(3)/2" or "-1/2"."""
    if isinstance(value, (int, float)):
        return float(value)
    text = str(value).strip().lower()
    if not text or not _SCALAR_RE.match(text):
        raise ValueError(f"cannot parse scalar {value!r}")
    try:
        return float(eval(text, {"__builtins__": {}}, dict(_SCALAR_NAMES)))
    except Exception as exc:
        raise ValueError(f"cannot parse scalar {value!r}: {exc}") from None


@dataclass(frozen=True)
class LieAlgebra8:
    """Jacobi-validated structure constants of an 8-dimensional Lie algebra."""

    name: str
    c: np.ndarray  # c[i, j, k] = c^k_{ij}

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float)
        if c.shape != (DIM, DIM, DIM):
            raise ValueError(f"structure constants must be {DIM}^3, got {c.shape}")
        if np.max(np.abs(c + np.einsum("ijk->jik", c))) > 0.0:
            raise ValueError("structure constants are not antisymmetric in (i, j)")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)
        res, where = self.jacobi_residual()
        if res > JACOBI_TOL:
            raise ValueError(
                f"algebra {self.name!r} violates the Jacobi identity at "
                f"(i,j,k,l)={where} with residual {res:.3e}"
            )

    def jacobi_residual(self) -> tuple[float, tuple[int, int, int, int]]:
        c = self.c
        jac = (
            np.einsum("ijm,mkl->ijkl", c, c)
            + np.einsum("jkm,mil->ijkl", c, c)
            + np.einsum("kim,mjl->ijkl", c, c)
        )
        flat = int(np.argmax(np.abs(jac)))
        where = np.unravel_index(flat, jac.shape)
        return float(np.max(np.abs(jac))), tuple(int(w) for w in where)

    @classmethod
    def abelian(cls, name: str = "abelian") -> "LieAlgebra8":
        return cls(name, np.zeros((DIM, DIM, DIM)))

    @classmethod
    def from_brackets(cls, constants, name: str) -> "LieAlgebra8":
        """constants: iterable of (i, j, k, value) meaning [e_i,e_j] ∋ value*e_k."""
        c = np.zeros((DIM, DIM, DIM))
        for i, j, k, v in constants:
            if not (0 <= i < DIM and 0 <= j < DIM and 0 <= k < DIM):
                raise ValueError(f"index out of range in constant ({i},{j},{k})")
            if i == j:
                raise ValueError(f"bracket constant with i == j == {i}")
            c[i, j, k] += v
            c[j, i, k] -= v
        return cls(name, c)

    def mirrored(self) -> "LieAlgebra8":
        """Opposite bracket: the right-invariant counterpart of this frame."""
        return LieAlgebra8(self.name + "-mirror", -self.c)

    def is_abelian(self) -> bool:
        return not np.any(self.c)

    def lowered(self, g: np.ndarray) -> np.ndarray:
        """c_{ijk} = c^m_{ij} g_{mk}."""
        return np.einsum("ijm,mk->ijk", self.c, g)

    def structure_equation(self, k: int) -> KForm:
        """The 2-form de^k = -(1/2) c^k_{ij} e^i ^ e^j."""
        out: dict = {}
        for i in range(DIM):
            for j in range(i + 1, DIM):
                v = -self.c[i, j, k]
                if v != 0.0:
                    out[(i, j)] = v
        return KForm(2, out)


def load_algebra(spec, name: str | None = None) -> LieAlgebra8:
    """Build a validated algebra from a spec dict, JSON text or file path.

    Schema: {"name": str, "dim": 8, "convention": "brackets" |
    "structure_equations", "constants": [{"i", "j", "k", "c"}, ...]} where
    "c" may be a number or exact text such as "sqrt(3)/2".
    """
    if isinstance(spec, (str, Path)):
        spec = json.loads(Path(spec).read_text())
    if not isinstance(spec, dict):
        raise ValueError("algebra spec must be a dict or a path to a JSON file")
    if int(spec.get("dim", DIM)) != DIM:
        raise ValueError(f"only dim = {DIM} algebras are supported")
    convention = spec.get("convention", "brackets")
    if convention not in ("brackets", "structure_equations"):
        raise ValueError(f"unknown convention {convention!r}")
    sign = 1.0 if convention == "brackets" else -1.0
    constants = []
    for entry in spec.get("constants", []):
        i, j, k = int(entry["i"]), int(entry["j"]), int(entry["k"])
        constants.append((i, j, k, sign * parse_scalar(entry["c"])))
    return LieAlgebra8.from_brackets(constants, name or spec.get("name", "algebra"))


def ce_differential(beta: KForm, alg: LieAlgebra8) -> KForm:
    """Invariant exterior derivative determined by the structure constants.

    Defined on frame covectors by the structure equations and extended as an
    antiderivation; squares to zero exactly when Jacobi holds.
    """
    if beta.degree >= DIM:
        raise ValueError("no degree-8 differential in dimension eight")
    if beta.degree == 0:
        return KForm.zero(1)
    d1 = [alg.structure_equation(k) for k in range(DIM)]
    out = KForm.zero(beta.degree + 1)
    for idx, coeff in beta.coeffs.items():
        for p, i in enumerate(idx):
            if not d1[i].coeffs:
                continue
            rest = KForm(beta.degree - 1, {idx[:p] + idx[p + 1:]: coeff})
            sign = -1.0 if p % 2 else 1.0
            out = out + sign * wedge(d1[i], rest)
    return out
