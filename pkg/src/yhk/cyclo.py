"""Cyclotomic quotients of the affine algebra.

A weight datum ``lambda`` (finitely many nonnegative multiplicities over
residues, total d >= 1) determines the monic polynomial
``f(X_1) = prod_i (X_1 - q^i)^{lambda_i}`` and the quotient by the two-sided
ideal it generates.  The quotient has the finite basis of monomials
X^alpha t^beta g_w with every alpha_j in the window 0..d-1, of total size
d^n r^n n!.

Reduction to the canonical window representative is computed by acting on
the window span from the left: t_j, g_i and X_1^{+-1} visibly preserve the
span (divided differences only interpolate exponents; X_1 powers rewrite
through f), and X_j for j > 1 acts through the tower
X_j = g_{j-1} X_{j-1} g_{j-1}.  This realizes left multiplication modulo
the ideal with no unbounded search, so no iteration cap is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ayh
from . import symgroup as sg
from .errors import ResourceLimitError
from .scalars import Scalar

__all__ = [
    "WeightDatum",
    "f_lambda",
    "f_lambda_coeffs",
    "reduce",
    "in_window",
    "regular_representation",
]


@dataclass(frozen=True)
class WeightDatum:
    """Multiplicities lambda_i >= 0 over residues i, finitely many nonzero,
    d = sum lambda_i >= 1.  Residues are plain integers; at a root of unity
    of order e they should lie in 0..e-1."""

    lam: tuple[tuple[int, int], ...]  # sorted (residue, multiplicity) pairs

    @staticmethod
    def of(data: dict[int, int]) -> "WeightDatum":
        items = tuple(sorted((int(i), int(m)) for i, m in data.items() if m))
        if any(m < 0 for _, m in items):
            raise ValueError("negative multiplicity in weight datum")
        if sum(m for _, m in items) < 1:
            raise ValueError("weight datum must have d >= 1")
        return WeightDatum(items)

    @staticmethod
    def from_charges(charges) -> "WeightDatum":
        out: dict[int, int] = {}
        for c in charges:
            out[int(c)] = out.get(int(c), 0) + 1
        return WeightDatum.of(out)

    @property
    def d(self) -> int:
        return sum(m for _, m in self.lam)

    def multiplicity(self, i: int) -> int:
        for j, m in self.lam:
            if j == i:
                return m
        return 0

    def charges(self) -> list[int]:
        out = []
        for i, m in self.lam:
            out.extend([i] * m)
        return out

    def residues(self) -> list[int]:
        return [i for i, _ in self.lam]

    def to_json(self) -> dict:
        return {"lambda": {str(i): m for i, m in self.lam}}

    @staticmethod
    def from_json(data: dict) -> "WeightDatum":
        return WeightDatum.of({int(i): m for i, m in data["lambda"].items()})


def f_lambda_coeffs(lam: WeightDatum) -> list[Scalar]:
    """Coefficients c_0..c_d of the monic polynomial prod (X - q^i)^m,
    lowest degree first; c_d = 1 and c_0 = prod (-q^i)^m."""
    coeffs = [Scalar.one()]
    for i, m in lam.lam:
        root = Scalar.q_power(i)
        for _ in range(m):
            nxt = [Scalar.zero()] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                nxt[k + 1] = nxt[k + 1] + c
                nxt[k] = nxt[k] - c * root
            coeffs = nxt
    return coeffs


def f_lambda(lam: WeightDatum, r: int, n: int) -> ayh.PbwElement:
    """The defining polynomial evaluated at X_1, as a normal-form element."""
    coeffs = f_lambda_coeffs(lam)
    terms = {}
    for k, c in enumerate(coeffs):
        if not c.is_zero():
            alpha = [0] * n
            alpha[0] = k
            terms[(tuple(alpha), (0,) * n, sg.identity(n))] = c
    return ayh.PbwElement.make(r, n, terms)


def in_window(a: ayh.PbwElement, d: int) -> bool:
    return all(all(0 <= x <= d - 1 for x in alpha) for (alpha, _, _) in a.terms)


# ---------------------------------------------------------------------------
# the window action
# ---------------------------------------------------------------------------

Terms = dict[ayh.Monomial, Scalar]


def _acc(out: Terms, key: ayh.Monomial, c: Scalar) -> None:
    cur = out.get(key)
    s = c if cur is None else cur + c
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


def _apply_g(r: int, i: int, v: Terms) -> Terms:
    out: Terms = {}
    for (alpha, beta, w), c in v.items():
        for m2, d2 in ayh._lmul_mono(r, i, alpha, beta, w):
            _acc(out, m2, c * d2)
    return out


def _apply_e(r: int, i: int, v: Terms) -> Terms:
    out: Terms = {}
    frac = Scalar.of(Fraction(1, r))
    for (alpha, beta, w), c in v.items():
        cf = c * frac
        for s in range(r):
            eb = list(beta)
            eb[i - 1] = (eb[i - 1] + s) % r
            eb[i] = (eb[i] - s) % r
            _acc(out, (alpha, tuple(eb), w), cf)
    return out


def _apply_ginv(r: int, i: int, v: Terms) -> Terms:
    qmq = Scalar.q() - Scalar.q_power(-1)
    out = _apply_g(r, i, v)
    for m2, c in _apply_e(r, i, v).items():
        _acc(out, m2, -(c * qmq))
    return out


def _apply_x1(d: int, coeffs: list[Scalar], v: Terms, inverse: bool) -> Terms:
    out: Terms = {}
    c0_inv = None
    for (alpha, beta, w), c in v.items():
        a1 = alpha[0]
        if not inverse:
            if a1 + 1 <= d - 1:
                _acc(out, ((a1 + 1,) + alpha[1:], beta, w), c)
            else:
                # X_1^d = -(c_{d-1} X^{d-1} + ... + c_0)
                for k in range(d):
                    if not coeffs[k].is_zero():
                        _acc(out, ((k,) + alpha[1:], beta, w), -(c * coeffs[k]))
        else:
            if a1 - 1 >= 0:
                _acc(out, ((a1 - 1,) + alpha[1:], beta, w), c)
            else:
                # X_1^{-1} = -(X^{d-1} + c_{d-1} X^{d-2} + ... + c_1)/c_0
                if c0_inv is None:
                    c0_inv = coeffs[0].inv()
                for k in range(d):
                    ck1 = Scalar.one() if k == d - 1 else coeffs[k + 1]
                    if not ck1.is_zero():
                        _acc(out, ((k,) + alpha[1:], beta, w), -(c * ck1 * c0_inv))
    return out


def _apply_x(r: int, d: int, coeffs: list[Scalar], j: int, v: Terms,
             inverse: bool) -> Terms:
    if j == 1:
        return _apply_x1(d, coeffs, v, inverse)
    if not inverse:
        v = _apply_g(r, j - 1, v)
        v = _apply_x(r, d, coeffs, j - 1, v, False)
        return _apply_g(r, j - 1, v)
    v = _apply_ginv(r, j - 1, v)
    v = _apply_x(r, d, coeffs, j - 1, v, True)
    return _apply_ginv(r, j - 1, v)


def reduce(a: ayh.PbwElement, lam: WeightDatum) -> ayh.PbwElement:
    """Canonical window representative of a modulo the cyclotomic ideal."""
    r, n = a.r, a.n
    d = lam.d
    coeffs = f_lambda_coeffs(lam)
    out: Terms = {}
    for (alpha, beta, w), c in a.terms.items():
        v: Terms = {((0,) * n, beta, w): Scalar.one()}
        for j in range(n, 0, -1):
            aj = alpha[j - 1]
            for _ in range(abs(aj)):
                v = _apply_x(r, d, coeffs, j, v, inverse=aj < 0)
        for m2, c2 in v.items():
            _acc(out, m2, c * c2)
    result = ayh.PbwElement(r, n, out)
    assert in_window(result, d), "window reduction left the window"
    return result


# ---------------------------------------------------------------------------
# the regular representation on the window basis
# ---------------------------------------------------------------------------

def window_basis(lam: WeightDatum, r: int, n: int) -> list[ayh.Monomial]:
    """The quotient basis X^alpha t^beta g_w, 0 <= alpha_j <= d-1, in a
    fixed sorted order."""
    d = lam.d
    alphas = list(_boxes(d, n))
    betas = list(_boxes(r, n))
    perms = sg.all_perms(n)
    return [(a, b, w) for a in alphas for b in betas for w in perms]


def _boxes(bound: int, n: int):
    if n == 0:
        yield ()
        return
    for rest in _boxes(bound, n - 1):
        for x in range(bound):
            yield rest + (x,)


def regular_representation(lam: WeightDatum, r: int, n: int,
                           max_dim: int = 4096):
    """Left multiplication matrices of every generator on the window basis;
    dimension d^n r^n n!.  The action visibly preserves the span, so closure
    holds by construction; the relation suite on the matrices is the real
    verification and lives with the module machinery."""
    from .linalg import Matrix
    from .rep import FdModule

    d = lam.d
    basis = window_basis(lam, r, n)
    dim = len(basis)
    if dim > max_dim:
        raise ResourceLimitError(
            f"regular representation dimension {dim} exceeds guard {max_dim}")
    index = {m: i for i, m in enumerate(basis)}
    coeffs = f_lambda_coeffs(lam)

    def to_vec(terms: Terms):
        return {index[m]: c for m, c in terms.items()}

    gens: dict[str, Matrix] = {}
    for j in range(1, n + 1):
        cols = []
        for (alpha, beta, w) in basis:
            nb = list(beta)
            nb[j - 1] = (nb[j - 1] + 1) % r
            cols.append({index[(alpha, tuple(nb), w)]: Scalar.one()})
        gens[f"t{j}"] = Matrix(dim, dim, cols)
    for i in range(1, n):
        cols = []
        for m in basis:
            cols.append(to_vec(_apply_g(r, i, {m: Scalar.one()})))
        gens[f"g{i}"] = Matrix(dim, dim, cols)
    for j in range(1, n + 1):
        cols = []
        icols = []
        for m in basis:
            cols.append(to_vec(_apply_x(r, d, coeffs, j, {m: Scalar.one()}, False)))
            icols.append(to_vec(_apply_x(r, d, coeffs, j, {m: Scalar.one()}, True)))
        gens[f"X{j}"] = Matrix(dim, dim, cols)
        gens[f"Xi{j}"] = Matrix(dim, dim, icols)
    return FdModule(r=r, n=n, dim=dim, gens=gens)
