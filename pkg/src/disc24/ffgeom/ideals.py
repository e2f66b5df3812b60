"""Vanishing-ideal interpolation from point samples."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import RankNotStabilized
from .modp import kernel_mod_p
from .parametrize import ProjPointSet
from .polys import dense_eval, eval_monomials, monomial_order_tag, monomials


@dataclass(frozen=True)
class IdealPiece:
    prime: int
    ambient_dim: int
    degree: int
    monomial_order: str
    monos: tuple[tuple[int, ...], ...]
    basis: tuple[tuple[int, ...], ...]  # dense coefficient rows over monos

    @property
    def dim(self) -> int:
        return len(self.basis)

    def eval_basis(self, point) -> list[int]:
        return [dense_eval(row, self.monos, point, self.prime) for row in self.basis]

    def vanishes_at(self, point) -> bool:
        return all(v == 0 for v in self.eval_basis(point))


def _kernel_dim(points, monos, p) -> tuple[list[list[int]], int]:
    rows = [eval_monomials(pt, monos, p) for pt in points]
    kern = kernel_mod_p(rows, len(monos), p)
    return kern, len(kern)


def ideal_piece(points: ProjPointSet, degree: int) -> IdealPiece:
    """Degree-d forms vanishing on the sample, with a stabilization re-run.

    The kernel is recomputed from the first half of the points; a dimension
    mismatch signals an undersampled or degenerate point set.
    """
    p = points.p
    nvars = points.dim + 1
    monos = monomials(nvars, degree)
    if len(points) < 2 * len(monos):
        raise RankNotStabilized(
            f"need at least {2 * len(monos)} points, got {len(points)}"
        )
    kern, dim_full = _kernel_dim(points.points, monos, p)
    _, dim_half = _kernel_dim(points.points[: len(points) // 2], monos, p)
    if dim_full != dim_half:
        raise RankNotStabilized(
            f"kernel dimension did not stabilize ({dim_half} -> {dim_full})"
        )
    return IdealPiece(
        prime=p,
        ambient_dim=points.dim,
        degree=degree,
        monomial_order=monomial_order_tag(nvars),
        monos=monos,
        basis=tuple(tuple(row) for row in kern),
    )
