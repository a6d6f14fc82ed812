"""Assembled geometry: an algebra plus a fundamental form and everything derived.

Building a Geometry computes the induced metric, Lee form, characteristic
torsion, Levi-Civita and torsion connections and both curvatures once; the
identity suite then reads cached dense tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .connection import (
    CurvatureTensor,
    FrameConnection,
    codifferential,
    connection_from_torsion,
    covariant_derivative,
    curvature,
    levi_civita,
    lee_form,
    ricci,
    scalar_curv,
    sigma_t,
    spin7_torsion,
)
from .forms import KForm, norm_sq
from .liealgebra import LieAlgebra8, ce_differential
from .structure import Spin7Form


@dataclass(frozen=True)
class SolitonData:
    """Gradient data for the steady soliton checks.

    f_gradient holds the frame components of df; the zero covector means a
    constant potential, which is the invariant-geometry default.
    """

    f_gradient: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.f_gradient, dtype=float)
        if v.shape != (8,):
            raise ValueError(f"gradient covector needs 8 components, got {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("gradient covector must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "f_gradient", v)

    @classmethod
    def constant_potential(cls) -> "SolitonData":
        return cls(np.zeros(8))


@dataclass(frozen=True)
class Geometry:
    name: str
    algebra: LieAlgebra8
    structure: Spin7Form
    theta: KForm
    torsion: KForm
    lc: FrameConnection
    conn: FrameConnection
    curv: CurvatureTensor
    curv_lc: CurvatureTensor

    @classmethod
    def build(cls, algebra: LieAlgebra8, phi: KForm, name: str | None = None) -> "Geometry":
        structure = Spin7Form.from_form(phi)
        theta = lee_form(structure, algebra)
        torsion = spin7_torsion(structure, algebra)
        lc = levi_civita(algebra, structure.metric)
        conn = connection_from_torsion(lc, torsion)
        return cls(
            name=name or algebra.name,
            algebra=algebra,
            structure=structure,
            theta=theta,
            torsion=torsion,
            lc=lc,
            conn=conn,
            curv=curvature(conn, algebra),
            curv_lc=curvature(lc, algebra),
        )

    # -- cached dense tables --------------------------------------------------

    @property
    def metric(self):
        return self.structure.metric

    @cached_property
    def phi4(self) -> np.ndarray:
        return self.structure.dense

    @cached_property
    def t3(self) -> np.ndarray:
        return self.torsion.to_array()

    @cached_property
    def theta_vec(self) -> np.ndarray:
        return self.theta.covector_components()

    @cached_property
    def theta_up(self) -> np.ndarray:
        return self.metric.inv @ self.theta_vec

    @cached_property
    def dtorsion(self) -> KForm:
        return ce_differential(self.torsion, self.algebra)

    @cached_property
    def dt4(self) -> np.ndarray:
        return self.dtorsion.to_array()

    @cached_property
    def sigma(self) -> KForm:
        return sigma_t(self.torsion, self.metric)

    @cached_property
    def sigma4(self) -> np.ndarray:
        return self.sigma.to_array()

    @cached_property
    def nabla_t(self) -> np.ndarray:
        return covariant_derivative(self.conn, self.t3)

    @cached_property
    def nabla_t_lc(self) -> np.ndarray:
        return covariant_derivative(self.lc, self.t3)

    @cached_property
    def nabla_theta(self) -> np.ndarray:
        return covariant_derivative(self.conn, self.theta_vec)

    @cached_property
    def nabla_theta_lc(self) -> np.ndarray:
        return covariant_derivative(self.lc, self.theta_vec)

    @cached_property
    def dtheta(self) -> KForm:
        return ce_differential(self.theta, self.algebra)

    @cached_property
    def delta_torsion(self) -> KForm:
        return codifferential(self.torsion, self.algebra, self.lc)

    @cached_property
    def delta_t2(self) -> np.ndarray:
        return self.delta_torsion.to_array()

    @cached_property
    def delta_theta(self) -> float:
        return -float(np.einsum("ab,ab->", self.metric.inv, self.nabla_theta_lc))

    @cached_property
    def delta_phi(self) -> KForm:
        return codifferential(self.structure.phi, self.algebra, self.lc)

    @cached_property
    def ric(self) -> np.ndarray:
        return ricci(self.curv, self.metric)

    @cached_property
    def ric_lc(self) -> np.ndarray:
        return ricci(self.curv_lc, self.metric)

    @cached_property
    def scal(self) -> float:
        return scalar_curv(self.ric, self.metric)

    @cached_property
    def scal_lc(self) -> float:
        return scalar_curv(self.ric_lc, self.metric)

    @cached_property
    def torsion_norm_sq(self) -> float:
        return norm_sq(self.torsion, self.metric)

    @cached_property
    def theta_norm_sq(self) -> float:
        return norm_sq(self.theta, self.metric)
