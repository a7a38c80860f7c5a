"""Affine Hecke algebras of type A and their seminormal simple modules.

The affine Hecke algebra on n strands is the rank-(1, n) instance of the
PBW engine: with r = 1 every t_j is 1 and every idempotent e_i is 1, so the
quadratic relation becomes (T_i - q)(T_i + q^{-1}) = 0 and the tower turns
into T_i Y_i T_i = Y_{i+1}.  Elements are written Y^gamma T_w; the symbols
T, Y are aliases for g, X at r = 1.

Seminormal modules: for a partition shape and an integer charge c, the
basis is the standard tableaux; Y_j acts diagonally with eigenvalue
q^(c + 2*content(box of j)) and T_i acts on tableau pairs by the classical
seminormal 2x2 blocks.  This needs generic q (the block denominators are
1 - q^(2k)); specializing these matrices at a root of unity is refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ayh
from . import symgroup as sg
from .errors import PoleError
from .linalg import Matrix, Subspace, generalized_eigenspace, restrict_operator
from .partitions import (Partition, hook_length_count, standard_tableaux,
                         tableau_position)
from .scalars import Scalar, Specialization

__all__ = [
    "hecke_gen",
    "hecke_mult",
    "seminormal_simple",
    "ev_pullback",
    "delta_a",
    "e_a",
    "TensorHeckeModule",
    "MuModule",
    "check_mu_relations",
]


def hecke_gen(n: int, kind: str, index: int) -> ayh.PbwElement:
    """Generators T_i, Y_j, Y_j^{-1} (kinds 'T', 'Y', 'Yi') in normal form."""
    table = {"T": "g", "Ti": "gi", "Y": "X", "Yi": "Xi"}
    if kind not in table:
        raise ValueError(f"unknown affine Hecke generator kind {kind!r}")
    return ayh.gen(1, n, table[kind], index)


def hecke_mult(a: ayh.PbwElement, b: ayh.PbwElement) -> ayh.PbwElement:
    if a.r != 1 or b.r != 1:
        raise ValueError("affine Hecke elements have r = 1")
    return ayh.mult(a, b)


# ---------------------------------------------------------------------------
# seminormal simple modules at generic q
# ---------------------------------------------------------------------------

def seminormal_simple(shape: Partition, charge: int = 0,
                      specialization: Specialization | None = None):
    """The simple module of the n-strand algebra attached to a partition of
    n, with Y_1 acting by q^charge on the vacuum box."""
    from .rep import FdModule

    if specialization is not None and not specialization.is_generic():
        raise PoleError("seminormal matrices require generic q")
    shape = tuple(shape)
    n = sum(shape)
    tabs = standard_tableaux(shape)
    dim = len(tabs)
    index = {t: i for i, t in enumerate(tabs)}
    q = Scalar.q()
    qi = Scalar.q_power(-1)
    qmq = q - qi

    def content(t, k: int) -> int:
        row, col = tableau_position(t, k)
        return col - row

    gens: dict[str, Matrix] = {}
    for j in range(1, n + 1):
        gens[f"t{j}"] = Matrix.identity(dim)
    for j in range(1, n + 1):
        cols = [{index[t]: Scalar.q_power(charge + 2 * content(t, j))} for t in tabs]
        icols = [{index[t]: Scalar.q_power(-(charge + 2 * content(t, j)))} for t in tabs]
        gens[f"X{j}"] = Matrix(dim, dim, cols)
        gens[f"Xi{j}"] = Matrix(dim, dim, icols)
    for i in range(1, n):
        entries: dict[tuple[int, int], Scalar] = {}
        done = set()
        for t in tabs:
            ti = index[t]
            if ti in done:
                continue
            ri, ci = tableau_position(t, i)
            rj, cj = tableau_position(t, i + 1)
            if ri == rj:
                entries[(ti, ti)] = q
                done.add(ti)
                continue
            if ci == cj:
                entries[(ti, ti)] = -qi
                done.add(ti)
                continue
            swapped = _swap_entries(t, i, i + 1)
            si = index[swapped]
            a = ci - ri
            b = cj - rj
            x = Scalar.q_power(2 * (b - a))
            d1 = qmq / (Scalar.one() - x.inv())
            d2 = qmq / (Scalar.one() - x)
            entries[(ti, ti)] = d1
            entries[(si, ti)] = Scalar.one()
            entries[(ti, si)] = d1 * d2 + Scalar.one()
            entries[(si, si)] = d2
            done.add(ti)
            done.add(si)
        gens[f"g{i}"] = Matrix.from_entries(dim, dim, entries)
    return FdModule(r=1, n=n, dim=dim, gens=gens)


def _swap_entries(t, a: int, b: int):
    out = tuple(tuple(b if v == a else a if v == b else v for v in row)
                for row in t)
    return out


def seminormal_dimension(shape: Partition) -> int:
    return hook_length_count(tuple(shape))


# ---------------------------------------------------------------------------
# evaluation pullback and branching slices
# ---------------------------------------------------------------------------

def ev_pullback(module, lam) -> object:
    """Regard a cyclotomic-quotient module as a module for the affine
    algebra (the matrices do not change); asserts that the defining
    polynomial annihilates Y_1."""
    from .cyclo import f_lambda_coeffs

    coeffs = f_lambda_coeffs(lam)
    y1 = module.gens["X1"]
    val = y1.evaluate_poly(coeffs)
    if not val.is_zero():
        raise ValueError("the defining polynomial does not annihilate Y_1")
    return module


def delta_a(module, a: Scalar):
    """The generalized a-eigenspace of Y_n, as a module for the subalgebra
    generated by T_1..T_{n-2} and Y_1..Y_n (the (n-1, 1) subalgebra)."""
    from .rep import FdModule

    n = module.n
    sub = Subspace(generalized_eigenspace(module.gens[f"X{n}"], a))
    gens: dict[str, Matrix] = {}
    for name, mat in module.gens.items():
        if name == f"g{n-1}":
            continue
        gens[name] = restrict_operator(mat, sub)
    return FdModule(r=1, n=n, dim=sub.dim, gens=gens)


def e_a(module, a: Scalar):
    """delta_a followed by restriction to the first n-1 strands."""
    from .rep import FdModule

    n = module.n
    d = delta_a(module, a)
    gens = {name: mat for name, mat in d.gens.items()
            if name not in (f"t{n}", f"X{n}", f"Xi{n}")}
    return FdModule(r=1, n=n - 1, dim=d.dim, gens=gens)


# ---------------------------------------------------------------------------
# tensor products over a composition
# ---------------------------------------------------------------------------

@dataclass
class MuModule:
    """A module over the mu-component of the direct-sum tensor algebra: one
    factor algebra per block of the composition, presented globally with
    generators T_i for within-block i and Y_j (1 <= j <= n)."""

    mu: sg.Composition
    dim: int
    gens: dict[str, Matrix]

    @property
    def n(self) -> int:
        return sum(self.mu)

    def T(self, i: int) -> Matrix:
        return self.gens[f"T{i}"]

    def Y(self, j: int) -> Matrix:
        return self.gens[f"Y{j}"]

    def Yi(self, j: int) -> Matrix:
        return self.gens[f"Yi{j}"]

    def trace_vector(self) -> list[tuple[str, Scalar]]:
        return [(name, self.gens[name].trace()) for name in sorted(self.gens)]


@dataclass
class TensorHeckeModule:
    """Per-block affine Hecke modules, combined into the tensor module over
    the composition's tensor-product algebra."""

    mu: sg.Composition
    factors: list  # FdModule with r = 1, one per block (size mu_k)

    def __post_init__(self):
        if len(self.factors) != len(self.mu):
            raise ValueError("one factor per composition block required")
        for m, fac in zip(self.mu, self.factors):
            if fac.n != m:
                raise ValueError(
                    f"factor of rank {fac.n} attached to block of size {m}")

    @property
    def dim(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.dim
        return out

    def mu_module(self) -> MuModule:
        mu = self.mu
        n = sum(mu)
        ps = sg.prefix_sums(mu)
        dims = [f.dim for f in self.factors]

        def kron_at(k: int, mat: Matrix) -> Matrix:
            out = None
            for idx, d in enumerate(dims):
                piece = mat if idx == k else Matrix.identity(d)
                out = piece if out is None else out.kron(piece)
            return out if out is not None else Matrix.identity(1)

        gens: dict[str, Matrix] = {}
        for i in sg.young_gens(mu):
            k = sg.block_of(mu, i) - 1
            local = i - ps[k]
            gens[f"T{i}"] = kron_at(k, self.factors[k].gens[f"g{local}"])
        for j in range(1, n + 1):
            k = sg.block_of(mu, j) - 1
            local = j - ps[k]
            gens[f"Y{j}"] = kron_at(k, self.factors[k].gens[f"X{local}"])
            gens[f"Yi{j}"] = kron_at(k, self.factors[k].gens[f"Xi{local}"])
        return MuModule(mu=mu, dim=self.dim, gens=gens)


def check_mu_relations(P: MuModule) -> bool:
    """Exact matrix check of the tensor-algebra relations: quadratic and
    braid for within-block T's, commuting Y's, the tower T_i Y_i T_i =
    Y_{i+1} inside blocks, and all cross-commutations."""
    mu = P.mu
    n = P.n
    q = Scalar.q()
    qi = Scalar.q_power(-1)
    I = Matrix.identity(P.dim)
    gens_i = set(sg.young_gens(mu))
    for i in gens_i:
        T = P.T(i)
        if not ((T - I.smul(q)) @ (T + I.smul(qi))).is_zero():
            return False
        if not (P.Y(i + 1) - T @ P.Y(i) @ T).is_zero():
            return False
        for j in gens_i:
            if j in (i - 1, i + 1) and j in gens_i and i < j:
                lhs = P.T(i) @ P.T(j) @ P.T(i)
                rhs = P.T(j) @ P.T(i) @ P.T(j)
                if not (lhs - rhs).is_zero():
                    return False
            if abs(i - j) >= 2 and i < j:
                if not (P.T(i) @ P.T(j) - P.T(j) @ P.T(i)).is_zero():
                    return False
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                if not (T @ P.Y(j) - P.Y(j) @ T).is_zero():
                    return False
    for j in range(1, n + 1):
        if not (P.Y(j) @ P.Yi(j) - I).is_zero():
            return False
        for k in range(j + 1, n + 1):
            if not (P.Y(j) @ P.Y(k) - P.Y(k) @ P.Y(j)).is_zero():
                return False
    return True
