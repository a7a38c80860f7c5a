"""Finite dimensional modules for the affine algebra and its cyclotomic
quotients: relation checking, isotypic decomposition, induction along
minimal coset representatives, the mutually inverse functors to and from
sums of tensor products of affine Hecke algebras, restriction/branching,
block decomposition, and the residue-indexed restriction/induction
functors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ayh, cyclo
from . import symgroup as sg
from .hecke import MuModule, TensorHeckeModule, seminormal_simple
from .linalg import (Matrix, Subspace, eigenspace, generalized_eigenspace,
                     restrict_operator, vec_axpy)
from .scalars import Scalar, cyclo_field

__all__ = [
    "FdModule",
    "MatrixCtx",
    "check_module_relations",
    "evaluate_element",
    "direct_sum_modules",
    "isotypic",
    "iota_pattern",
    "induce",
    "tensor_point_module",
    "module_from_mu_module",
    "simple_module",
    "all_simple_labels",
    "functor_F",
    "functor_G",
    "BranchSummand",
    "restrict_branch",
    "blocks",
    "BlockLabel",
    "functor_e",
    "functor_f",
    "trace_invariant",
    "weight_multiset",
    "module_to_json",
]


@dataclass
class FdModule:
    """A module given by one matrix per generator.  Full modules carry
    t_1..t_n, X_1..X_n (with inverses) and g_1..g_{n-1}; modules over a
    parabolic subalgebra carry g_i only for within-block i."""

    r: int
    n: int
    dim: int
    gens: dict[str, Matrix]

    def t(self, j: int) -> Matrix:
        return self.gens[f"t{j}"]

    def x(self, j: int) -> Matrix:
        return self.gens[f"X{j}"]

    def xinv(self, j: int) -> Matrix:
        return self.gens[f"Xi{j}"]

    def g(self, i: int) -> Matrix:
        return self.gens[f"g{i}"]

    def trace_vector(self) -> list[tuple[str, Scalar]]:
        return [(name, self.gens[name].trace()) for name in sorted(self.gens)]

    def is_zero_module(self) -> bool:
        return self.dim == 0


def direct_sum_modules(mods: list[FdModule]) -> FdModule:
    if not mods:
        raise ValueError("empty direct sum")
    r, n = mods[0].r, mods[0].n
    names = set(mods[0].gens)
    for m in mods[1:]:
        if (m.r, m.n) != (r, n) or set(m.gens) != names:
            raise ValueError("direct sum of incompatible modules")
    dim = sum(m.dim for m in mods)
    gens = {}
    for name in names:
        cols: list[dict[int, Scalar]] = []
        off = 0
        for m in mods:
            for col in m.gens[name].cols:
                cols.append({i + off: c for i, c in col.items()})
            off += m.dim
        gens[name] = Matrix(dim, dim, cols)
    return FdModule(r=r, n=n, dim=dim, gens=gens)


# ---------------------------------------------------------------------------
# evaluating normal-form elements on a module
# ---------------------------------------------------------------------------

def evaluate_element(M: FdModule, elem: ayh.PbwElement) -> Matrix:
    """The matrix of a normal-form element whose g-part stays inside the
    generators available on M."""
    out = Matrix.zeros(M.dim, M.dim)
    for (alpha, beta, w), c in elem.terms.items():
        mat = Matrix.identity(M.dim)
        for j, a in enumerate(alpha, start=1):
            if a > 0:
                for _ in range(a):
                    mat = M.x(j) @ mat
            elif a < 0:
                for _ in range(-a):
                    mat = M.xinv(j) @ mat
        for j, b in enumerate(beta, start=1):
            for _ in range(b):
                mat = M.t(j) @ mat
        for i in sg.reduced_word(w):
            mat = mat @ M.g(i)
        out = out + mat.smul(c)
    return out


class MatrixCtx:
    """Identity-evaluation context over a module's matrices; mirrors the
    symbolic context so the same families run on both."""

    def __init__(self, M: FdModule):
        self.M = M
        self.r = M.r
        self.n = M.n
        self._one = Matrix.identity(M.dim)

    def one(self):
        return self._one

    def gen(self, kind: str, index: int):
        M = self.M
        if kind == "t":
            return M.t(index)
        if kind == "X":
            return M.x(index)
        if kind == "Xi":
            return M.xinv(index)
        if kind == "g":
            return M.g(index)
        if kind == "e":
            return self.e_pair(index, index + 1)
        if kind == "gi":
            qmq = Scalar.q() - Scalar.q_power(-1)
            return M.g(index) - self.e_pair(index, index + 1).smul(qmq)
        if kind == "Th":
            q = Scalar.q()
            i = index
            inner = self._one - M.x(i) @ M.xinv(i + 1)
            return (M.g(i) @ inner).smul(q) + \
                self.e_pair(i, i + 1).smul(Scalar.one() - Scalar.q_power(2))
        raise ValueError(f"unknown generator kind {kind!r}")

    def e_pair(self, j: int, k: int):
        if j == k:
            return self._one
        M = self.M
        out = Matrix.zeros(M.dim, M.dim)
        tj = M.t(j)
        tk = M.t(k)
        pj = self._one
        for s in range(self.r):
            pk = self._one
            for _ in range((-s) % self.r):
                pk = tk @ pk
            out = out + (pj @ pk)
            pj = tj @ pj
        return out.smul(Fraction(1, self.r))

    def x_monomial(self, alpha):
        mat = self._one
        for j, a in enumerate(alpha, start=1):
            step = self.M.x(j) if a > 0 else self.M.xinv(j)
            for _ in range(abs(a)):
                mat = step @ mat
        return mat

    def t_monomial(self, beta):
        mat = self._one
        for j, b in enumerate(beta, start=1):
            for _ in range(b % self.r):
                mat = self.M.t(j) @ mat
        return mat

    def mul(self, a, b):
        return a @ b

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def smul(self, c, a):
        return a.smul(c)

    def is_zero(self, a):
        return a.is_zero()

    def power(self, a, m: int):
        return a.power(m)


def check_module_relations(M: FdModule, rng=None, dd_samples: int = 3) -> ayh.RelationReport:
    """The full defining/derived identity suite as exact matrix identities."""
    import random
    if rng is None:
        rng = random.Random(0)
    return ayh.core_families(MatrixCtx(M), rng=rng, dd_samples=dd_samples)


# ---------------------------------------------------------------------------
# isotypic slices
# ---------------------------------------------------------------------------

def iota_pattern(mu: sg.Composition) -> tuple[int, ...]:
    """The weakly increasing character pattern (1^mu_1, 2^mu_2, ...)."""
    out = []
    for k, m in enumerate(mu, start=1):
        out.extend([k] * m)
    return tuple(out)


def isotypic(M: FdModule, mu: sg.Composition) -> Subspace:
    """Image of the character projector for the pattern iota(mu): position
    j is projected to the t_j-eigenvalue zeta^(iota_j - 1)."""
    sg.check_composition(mu, M.n)
    iota = iota_pattern(mu)
    fld = cyclo_field(M.r)
    proj = Matrix.identity(M.dim)
    for j, ik in enumerate(iota, start=1):
        pj = Matrix.zeros(M.dim, M.dim)
        tpow = Matrix.identity(M.dim)
        for s in range(M.r):
            chi = Scalar.of(fld.zeta(-(ik - 1) * s))
            pj = pj + tpow.smul(chi)
            tpow = M.t(j) @ tpow
        proj = proj @ pj.smul(Fraction(1, M.r))
    sub = Subspace(proj.cols)
    # invariance under the parabolic generators
    for j in range(1, M.n + 1):
        for mat in (M.x(j), M.xinv(j), M.t(j)):
            for b in sub.rows:
                assert sub.contains(mat.matvec(b)), "isotypic slice not invariant"
    for i in sg.young_gens(mu):
        for b in sub.rows:
            assert sub.contains(M.g(i).matvec(b)), "isotypic slice not invariant"
    return sub


# ---------------------------------------------------------------------------
# induction along minimal coset representatives
# ---------------------------------------------------------------------------

def induce(W: FdModule, mu: sg.Composition, verify_expand: bool = False) -> FdModule:
    """Induction of a parabolic-subalgebra module to the full algebra.

    Basis g_tau (x) w over the minimal coset representatives tau; a
    generator h acts through the exact coset expansion of h * g_tau, with
    the subalgebra parts evaluated on W."""
    r, n = W.r, W.n
    sg.check_composition(mu, n)
    reps = sg.coset_reps(mu)
    tau_index = {t: i for i, t in enumerate(reps)}
    dim = len(reps) * W.dim

    gen_list = [("t", j) for j in range(1, n + 1)]
    gen_list += [("X", j) for j in range(1, n + 1)]
    gen_list += [("Xi", j) for j in range(1, n + 1)]
    gen_list += [("g", i) for i in range(1, n)]

    gens: dict[str, Matrix] = {}
    for kind, idx in gen_list:
        helem = ayh.gen(r, n, kind, idx)
        cols: list[dict[int, Scalar]] = [dict() for _ in range(dim)]
        for tau, ti in tau_index.items():
            prod = ayh.mult(helem, ayh.monomial(r, n, w=tau))
            expansion = ayh.expand_left_cosets(prod, mu, verify=verify_expand)
            for tau2, h2 in expansion.items():
                t2 = tau_index[tau2]
                block = evaluate_element(W, h2)
                for b in range(W.dim):
                    col = cols[ti * W.dim + b]
                    for i2, c in block.cols[b].items():
                        cur = col.get(t2 * W.dim + i2)
                        s = c if cur is None else cur + c
                        if s.is_zero():
                            col.pop(t2 * W.dim + i2, None)
                        else:
                            col[t2 * W.dim + i2] = s
        name = f"{kind}{idx}"
        gens[name] = Matrix(dim, dim, cols)
    return FdModule(r=r, n=n, dim=dim, gens=gens)


def tensor_point_module(r: int, mu: sg.Composition, factors) -> FdModule:
    """The parabolic-subalgebra module carried by the character line of the
    pattern iota(mu) tensored with per-block affine Hecke modules: t_j acts
    by the pattern character, g_w by the tensor T_w, X_j by the tensor Y_j."""
    P = TensorHeckeModule(tuple(mu), list(factors)).mu_module()
    return module_from_mu_module(r, P)


def module_from_mu_module(r: int, P: MuModule) -> FdModule:
    mu = P.mu
    n = sum(mu)
    fld = cyclo_field(r)
    iota = iota_pattern(mu)
    gens: dict[str, Matrix] = {}
    for j in range(1, n + 1):
        chi = Scalar.of(fld.zeta(iota[j - 1] - 1))
        gens[f"t{j}"] = Matrix.scalar(P.dim, chi)
        gens[f"X{j}"] = P.Y(j)
        gens[f"Xi{j}"] = P.Yi(j)
    for i in sg.young_gens(mu):
        gens[f"g{i}"] = P.T(i)
    return FdModule(r=r, n=n, dim=P.dim, gens=gens)


# ---------------------------------------------------------------------------
# simple modules at generic q, |lambda| = 1
# ---------------------------------------------------------------------------

def simple_module(r: int, n: int, mu: sg.Composition, shapes,
                  lam: cyclo.WeightDatum) -> FdModule:
    """The induced simple module attached to a composition and one partition
    per block, for a rank-one weight datum at generic q."""
    sg.check_composition(mu, n, parts=r)
    if lam.d != 1:
        raise ValueError("simple-module construction requires |lambda| = 1")
    shapes = [tuple(s) for s in shapes]
    if len(shapes) != r:
        raise ValueError("one shape per block required")
    for m, s in zip(mu, shapes):
        if sum(s) != m:
            raise ValueError(f"shape {s} does not have size {m}")
    charge = lam.charges()[0]
    factors = [seminormal_simple(s, charge) for s in shapes]
    W = tensor_point_module(r, mu, factors)
    M = induce(W, mu)
    fl = cyclo.f_lambda(lam, r, n)
    assert evaluate_element(M, fl).is_zero(), \
        "defining polynomial does not annihilate the induced module"
    return M


def all_simple_labels(r: int, n: int) -> list[tuple[sg.Composition, tuple]]:
    """Deterministic enumeration of (mu, shapes) labels."""
    from .partitions import partitions
    out = []
    for mu in sg.compositions(r, n):
        import itertools
        for shapes in itertools.product(*(partitions(m) for m in mu)):
            out.append((mu, shapes))
    return out


# ---------------------------------------------------------------------------
# the category equivalence, module-by-module
# ---------------------------------------------------------------------------

def functor_F(N: FdModule) -> dict[sg.Composition, MuModule]:
    """Per composition, the isotypic slice with T_i acting by g_i and Y_j
    by X_j."""
    out: dict[sg.Composition, MuModule] = {}
    for mu in sg.compositions(N.r, N.n):
        sub = isotypic(N, mu)
        gens: dict[str, Matrix] = {}
        for i in sg.young_gens(mu):
            gens[f"T{i}"] = restrict_operator(N.g(i), sub)
        for j in range(1, N.n + 1):
            gens[f"Y{j}"] = restrict_operator(N.x(j), sub)
            gens[f"Yi{j}"] = restrict_operator(N.xinv(j), sub)
        out[mu] = MuModule(mu=mu, dim=sub.dim, gens=gens)
    return out


def functor_G(r: int, n: int, P: dict[sg.Composition, MuModule]) -> FdModule:
    """Direct sum over compositions of the induction of the character line
    tensored with the given tensor-algebra module."""
    parts = []
    for mu in sg.compositions(r, n):
        Pmu = P.get(tuple(mu))
        if Pmu is None or Pmu.dim == 0:
            continue
        parts.append(induce(module_from_mu_module(r, Pmu), mu))
    if not parts:
        raise ValueError("zero module has no presentation at fixed rank")
    return direct_sum_modules(parts)


# ---------------------------------------------------------------------------
# eigenvalue scanning
# ---------------------------------------------------------------------------

def _exponent_bound(mat: Matrix) -> int:
    b = 0
    for col in mat.cols:
        for c in col.values():
            for p in (c.num, c.den):
                if p.c:
                    b = max(b, abs(p.min_exp()), abs(p.max_exp()))
    return b


def split_q_power_spectrum(mat: Matrix, generalized: bool = True,
                           extra: int = 4) -> list[tuple[int, list]]:
    """Split the full space into (generalized) eigenspaces of mat over
    eigenvalues q^m, scanning a window of exponents wide enough for the
    matrix entries; raises if mass is missing (non-integral spectrum)."""
    if mat.nrows == 0:
        return []
    bound = _exponent_bound(mat) + mat.nrows + extra
    out = []
    total = 0
    for m in range(-bound, bound + 1):
        val = Scalar.q_power(m)
        vecs = generalized_eigenspace(mat, val) if generalized else eigenspace(mat, val)
        if vecs:
            out.append((m, vecs))
            total += len(vecs)
        if total == mat.nrows:
            break
    if total != mat.nrows:
        raise ValueError(
            f"q-power eigenvalues account for {total} of {mat.nrows} dimensions; "
            "spectrum is not integral in the scanned window")
    return out


# ---------------------------------------------------------------------------
# restriction and branching
# ---------------------------------------------------------------------------

@dataclass
class BranchSummand:
    char_index: int          # k with t_n acting by zeta^(k-1)
    eigen_exponent: int      # m with X_n generalized eigenvalue q^m
    module: FdModule         # over the rank n-1 algebra

    @property
    def dim(self) -> int:
        return self.module.dim


def restrict_branch(M: FdModule) -> list[BranchSummand]:
    """Split the restriction to the (n-1, 1) subalgebra by the t_n-character
    and the generalized X_n-eigenvalue; summands are returned as rank-(n-1)
    modules with their (character, eigenvalue) labels."""
    r, n = M.r, M.n
    fld = cyclo_field(r)
    out: list[BranchSummand] = []
    total = 0
    for k in range(1, r + 1):
        tvecs = eigenspace(M.t(n), Scalar.of(fld.zeta(k - 1)))
        if not tvecs:
            continue
        tsub = Subspace(tvecs)
        xres = restrict_operator(M.x(n), tsub)
        for m, vecs in split_q_power_spectrum(xres):
            lifted = []
            for v in vecs:
                amb: dict[int, Scalar] = {}
                for i, c in v.items():
                    vec_axpy(amb, tsub.rows[i], c)
                lifted.append(amb)
            sub = Subspace(lifted)
            gens: dict[str, Matrix] = {}
            for j in range(1, n):
                gens[f"t{j}"] = restrict_operator(M.t(j), sub)
                gens[f"X{j}"] = restrict_operator(M.x(j), sub)
                gens[f"Xi{j}"] = restrict_operator(M.xinv(j), sub)
            for i in range(1, n - 1):
                gens[f"g{i}"] = restrict_operator(M.g(i), sub)
            piece = FdModule(r=r, n=n - 1, dim=sub.dim, gens=gens)
            out.append(BranchSummand(char_index=k, eigen_exponent=m, module=piece))
            total += sub.dim
    assert total == M.dim, "restriction summands do not exhaust the module"
    out.sort(key=lambda s: (s.char_index, s.eigen_exponent))
    return out


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------

BlockLabel = tuple[sg.Composition, tuple[tuple[int, int], ...]]


def _joint_slices(M: FdModule) -> list[tuple[tuple[int, ...], tuple[int, ...], Subspace]]:
    """Finest simultaneous splitting: honest t-eigenvalues, generalized
    X-eigenvalues; labels are (t-character vector, X-exponent vector)."""
    fld = cyclo_field(M.r)
    slices = [((), (), Subspace([{i: Scalar.one()} for i in range(M.dim)]))]
    for j in range(1, M.n + 1):
        nxt = []
        for tvec, xvec, sub in slices:
            res = restrict_operator(M.t(j), sub)
            for k in range(1, M.r + 1):
                vecs = eigenspace(res, Scalar.of(fld.zeta(k - 1)))
                if not vecs:
                    continue
                nxt.append((tvec + (k,), xvec, _lift(sub, vecs)))
        slices = nxt
    for j in range(1, M.n + 1):
        nxt = []
        for tvec, xvec, sub in slices:
            res = restrict_operator(M.x(j), sub)
            for m, vecs in split_q_power_spectrum(res):
                nxt.append((tvec, xvec + (m,), _lift(sub, vecs)))
        slices = nxt
    return slices


def _lift(sub: Subspace, vecs) -> Subspace:
    lifted = []
    for v in vecs:
        amb: dict[int, Scalar] = {}
        for i, c in v.items():
            vec_axpy(amb, sub.rows[i], c)
        lifted.append(amb)
    return Subspace(lifted)


def blocks(M: FdModule) -> dict[BlockLabel, FdModule]:
    """Simultaneous generalized eigenspace decomposition of the X's grouped
    by symmetric-group orbit (the content vector), intersected with the
    isotypic pieces; every slice is verified invariant and the slices
    exhaust the module."""
    groups: dict[BlockLabel, list] = {}
    for tvec, xvec, sub in _joint_slices(M):
        mu = tuple(tvec.count(k) for k in range(1, M.r + 1))
        gamma: dict[int, int] = {}
        for m in xvec:
            gamma[m] = gamma.get(m, 0) + 1
        label = (mu, tuple(sorted(gamma.items())))
        groups.setdefault(label, []).extend(sub.basis())
    out: dict[BlockLabel, FdModule] = {}
    total = 0
    for label in sorted(groups):
        sub = Subspace(groups[label])
        gens = {}
        for name, mat in M.gens.items():
            gens[name] = restrict_operator(mat, sub)  # raises if not invariant
        out[label] = FdModule(r=M.r, n=M.n, dim=sub.dim, gens=gens)
        total += sub.dim
    assert total == M.dim, "block slices do not exhaust the module"
    return out


# ---------------------------------------------------------------------------
# residue-indexed restriction and induction
# ---------------------------------------------------------------------------

def _gamma_shift(gamma: tuple[tuple[int, int], ...], j: int, delta: int):
    d = dict(gamma)
    d[j] = d.get(j, 0) + delta
    if d[j] < 0:
        return None
    if d[j] == 0:
        del d[j]
    return tuple(sorted(d.items()))


def functor_e(M: FdModule, j: int, k: int, lam: cyclo.WeightDatum) -> FdModule | None:
    """Character-k hom slice of the restriction, cut to the block
    (mu with block k lowered, content lowered at residue j).  Applied
    blockwise and summed."""
    r, n = M.r, M.n
    fld = cyclo_field(r)
    pieces = []
    for (mu, gamma), B in blocks(M).items():
        if mu[k - 1] == 0:
            continue
        target_gamma = _gamma_shift(gamma, j, -1)
        if target_gamma is None:
            continue
        mu_minus = tuple(m - 1 if idx == k - 1 else m for idx, m in enumerate(mu))
        vecs = eigenspace(B.t(n), Scalar.of(fld.zeta(k - 1)))
        if not vecs:
            continue
        sub = Subspace(vecs)
        gens = {}
        for jj in range(1, n):
            gens[f"t{jj}"] = restrict_operator(B.t(jj), sub)
            gens[f"X{jj}"] = restrict_operator(B.x(jj), sub)
            gens[f"Xi{jj}"] = restrict_operator(B.xinv(jj), sub)
        for i in range(1, n - 1):
            gens[f"g{i}"] = restrict_operator(B.g(i), sub)
        resmod = FdModule(r=r, n=n - 1, dim=sub.dim, gens=gens)
        piece = blocks(resmod).get((mu_minus, target_gamma))
        if piece is not None and piece.dim > 0:
            pieces.append(piece)
    if not pieces:
        return None
    return direct_sum_modules(pieces) if len(pieces) > 1 else pieces[0]


def functor_f(M: FdModule, j: int, k: int, lam: cyclo.WeightDatum) -> FdModule | None:
    """Induction of M tensored with the character-k line, cut to the block
    (mu with block k raised, content raised at residue j)."""
    r, n = M.r, M.n
    pieces = []
    for (mu, gamma), B in blocks(M).items():
        ind = _induce_one_strand(B, k, lam)
        mu_plus = tuple(m + 1 if idx == k - 1 else m for idx, m in enumerate(mu))
        target_gamma = _gamma_shift(gamma, j, +1)
        piece = blocks(ind).get((mu_plus, target_gamma))
        if piece is not None and piece.dim > 0:
            pieces.append(piece)
    if not pieces:
        return None
    return direct_sum_modules(pieces) if len(pieces) > 1 else pieces[0]


def _induce_one_strand(M: FdModule, k: int, lam: cyclo.WeightDatum) -> FdModule:
    """Induction from (rank n algebra) tensor (one framing line of
    character k) to the rank n+1 cyclotomic quotient.  Basis
    g_tau X_{n+1}^c (x) m over the n+1 minimal coset representatives of the
    (n, 1) composition and the window exponents c."""
    r, n = M.r, M.n
    d = lam.d
    n1 = n + 1
    nu = (n, 1)
    reps = sg.coset_reps(nu)
    tau_index = {t: i for i, t in enumerate(reps)}
    fld = cyclo_field(r)
    dim = len(reps) * d * M.dim

    def slot(ti: int, c: int) -> int:
        return (ti * d + c) * M.dim

    gen_list = [("t", j) for j in range(1, n1 + 1)]
    gen_list += [("X", j) for j in range(1, n1 + 1)]
    gen_list += [("Xi", j) for j in range(1, n1 + 1)]
    gen_list += [("g", i) for i in range(1, n1)]

    gens: dict[str, Matrix] = {}
    for kind, idx in gen_list:
        helem = ayh.gen(r, n1, kind, idx)
        cols: list[dict[int, Scalar]] = [dict() for _ in range(dim)]
        for tau, ti in tau_index.items():
            for c in range(d):
                alpha = [0] * n1
                alpha[n1 - 1] = c
                base = ayh.mult(ayh.monomial(r, n1, w=tau),
                                ayh.monomial(r, n1, alpha=alpha))
                e = cyclo.reduce(ayh.mult(helem, base), lam)
                expansion = ayh.expand_left_cosets(e, nu, verify=False)
                for tau2, h2 in expansion.items():
                    t2 = tau_index[tau2]
                    for (a2, b2, u2), coeff in h2.terms.items():
                        c2 = a2[n1 - 1]
                        assert 0 <= c2 <= d - 1, "window violated in induction"
                        chi = Scalar.of(fld.zeta((k - 1) * b2[n1 - 1]))
                        inner = ayh.monomial(r, n, alpha=a2[:n], beta=b2[:n],
                                             w=u2[:n], coeff=coeff * chi)
                        block = evaluate_element(M, inner)
                        for b in range(M.dim):
                            col = cols[slot(ti, c) + b]
                            for i2, cc in block.cols[b].items():
                                key = slot(t2, c2) + i2
                                cur = col.get(key)
                                s = cc if cur is None else cur + cc
                                if s.is_zero():
                                    col.pop(key, None)
                                else:
                                    col[key] = s
        gens[f"{kind}{idx}"] = Matrix(dim, dim, cols)
    return FdModule(r=r, n=n1, dim=dim, gens=gens)


# ---------------------------------------------------------------------------
# invariants for isomorphism testing of semisimple modules
# ---------------------------------------------------------------------------

def weight_multiset(M: FdModule) -> tuple:
    """Sorted multiset of joint weights: (t-character vector, X-exponent
    vector, multiplicity) over the finest simultaneous splitting.  A
    complete invariant of semisimple integral modules at generic q."""
    counts: dict[tuple, int] = {}
    for tvec, xvec, sub in _joint_slices(M):
        key = (tvec, xvec)
        counts[key] = counts.get(key, 0) + sub.dim
    return tuple(sorted((t, x, c) for (t, x), c in counts.items()))


def _invariant_words(r: int, n: int) -> list[tuple[tuple[str, int], ...]]:
    words: list[tuple[tuple[str, int], ...]] = []
    for j in range(1, n + 1):
        words.append((("t", j),))
        words.append((("X", j),))
        words.append((("Xi", j),))
        words.append((("t", j), ("X", j)))
        words.append((("t", j), ("Xi", j)))
        words.append((("X", j), ("X", j)))
        for b in range(2, r):
            words.append((("t", j),) * b + (("X", j),))
    for j in range(1, n + 1):
        for l in range(j + 1, n + 1):
            words.append((("t", j), ("t", l)))
            words.append((("X", j), ("Xi", l)))
            words.append((("t", j), ("X", j), ("t", l), ("Xi", l)))
    for i in range(1, n):
        words.append((("g", i),))
        words.append((("g", i), ("X", i)))
        words.append((("g", i), ("X", i + 1)))
        words.append((("g", i), ("t", i)))
        words.append((("g", i), ("X", i), ("Xi", i + 1)))
        words.append((("g", i), ("t", i), ("X", i)))
    return words


def trace_invariant(M: FdModule) -> tuple:
    """Dimension plus traces of a fixed list of short generator words,
    rendered canonically; equal vectors on the modules built here certify
    isomorphism at generic q (semisimplicity), differing vectors refute it."""
    from .scalars import scalar_to_json
    import json as _json
    traces = []
    ctx = MatrixCtx(M)
    for word in _invariant_words(M.r, M.n):
        mat = None
        for kind, idx in word:
            g = ctx.gen(kind, idx)
            mat = g if mat is None else mat @ g
        traces.append(_json.dumps(scalar_to_json(mat.trace(), M.r)))
    return (M.dim, tuple(traces))


def module_to_json(M: FdModule) -> dict:
    from .scalars import scalar_to_json
    return {
        "r": M.r,
        "n": M.n,
        "dim": M.dim,
        "generators": {
            name: [[scalar_to_json(mat.entry(i, j), M.r)
                    for j in range(mat.ncols)] for i in range(mat.nrows)]
            for name, mat in sorted(M.gens.items())
        },
    }
