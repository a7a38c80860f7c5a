"""The affine Yokonuma-Hecke algebra engine.

Elements are kept in PBW normal form: finite sums  sum_c c * X^alpha t^beta g_w
over monomials (alpha in Z^n, beta in (Z/r)^n, w in S_n).  Multiplication
rewrites products back into normal form using three primitive rules:

* commutative merge of the X- and t-parts;
* the braid/quadratic reduction  g_i g_w = g_{s_i w}  when the length goes
  up, and  g_{s_i w} + (q - q^{-1}) e_i g_w  when it goes down;
* the push rule  g_i (X^a t^b) = X^{s_i a} t^{s_i b} g_i
  + (q - q^{-1}) dd_i(X^a) e_i t^b,  where dd_i is the divided difference
  (f - s_i f)/(1 - X_i X_{i+1}^{-1}) and e_i = (1/r) sum_s t_i^s t_{i+1}^{-s}
  is always stored expanded into t-monomials.

Exponents of t are reduced into {0..r-1}; t_i^{-1} is t_i^{r-1}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import symgroup as sg
from .errors import RankMismatchError, ResourceLimitError
from .scalars import Scalar, scalar_from_json, scalar_to_json

__all__ = [
    "PbwElement",
    "zero",
    "one",
    "monomial",
    "gen",
    "e_pair",
    "mult",
    "divided_difference",
    "orbit_sum",
    "is_central",
    "expand_left_cosets",
    "check_relations",
    "check_theta",
    "check_xggx",
    "PbwCtx",
    "core_families",
    "theta_family",
    "xggx_family",
    "RelationReport",
    "element_to_json",
    "element_from_json",
]

MAX_SUPPORT = 200_000

Monomial = tuple[tuple[int, ...], tuple[int, ...], sg.Perm]


def set_max_support(limit: int) -> None:
    global MAX_SUPPORT
    MAX_SUPPORT = limit


class PbwElement:
    """A normal-form element of the rank-(r, n) affine algebra."""

    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms: dict[Monomial, Scalar]):
        self.r = r
        self.n = n
        self.terms = terms

    @staticmethod
    def make(r: int, n: int, terms: dict[Monomial, Scalar]) -> "PbwElement":
        return PbwElement(r, n, {m: c for m, c in terms.items() if not c.is_zero()})

    def is_zero(self) -> bool:
        return not self.terms

    def support_size(self) -> int:
        return len(self.terms)

    def __add__(self, other: "PbwElement") -> "PbwElement":
        _check_ranks(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            cur = out.get(m)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return PbwElement(self.r, self.n, out)

    def __neg__(self) -> "PbwElement":
        return PbwElement(self.r, self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "PbwElement") -> "PbwElement":
        return self + (-other)

    def smul(self, c) -> "PbwElement":
        c = Scalar.of(c)
        if c.is_zero():
            return PbwElement(self.r, self.n, {})
        return PbwElement(self.r, self.n, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, PbwElement):
            return NotImplemented
        return self.smul(c)

    def __mul__(self, other):
        if isinstance(other, PbwElement):
            return mult(self, other)
        return self.smul(other)

    def __eq__(self, other):
        if not isinstance(other, PbwElement):
            return NotImplemented
        if (self.r, self.n) != (other.r, other.n):
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[m] == other.terms[m] for m in self.terms)

    __hash__ = None

    def x_part_only(self) -> bool:
        ident = sg.identity(self.n)
        zb = (0,) * self.n
        return all(m[1] == zb and m[2] == ident for m in self.terms)

    def pt_part_only(self) -> bool:
        ident = sg.identity(self.n)
        return all(m[2] == ident for m in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (alpha, beta, w), c in self.sorted_terms():
            parts = []
            for j, a in enumerate(alpha):
                if a:
                    parts.append(f"X{j+1}^{a}" if a != 1 else f"X{j+1}")
            for j, b in enumerate(beta):
                if b:
                    parts.append(f"t{j+1}^{b}" if b != 1 else f"t{j+1}")
            if w != sg.identity(self.n):
                parts.append("g[" + ",".join(map(str, w)) + "]")
            mono = "*".join(parts) if parts else "1"
            bits.append(f"{c} {mono}")
        return "  +  ".join(bits)


def _check_ranks(a: PbwElement, b: PbwElement) -> None:
    if (a.r, a.n) != (b.r, b.n):
        raise RankMismatchError(
            f"rank mismatch: ({a.r},{a.n}) vs ({b.r},{b.n})")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def zero(r: int, n: int) -> PbwElement:
    return PbwElement(r, n, {})


def one(r: int, n: int) -> PbwElement:
    return monomial(r, n)


def monomial(r: int, n: int, alpha=None, beta=None, w=None, coeff=None) -> PbwElement:
    alpha = tuple(alpha) if alpha is not None else (0,) * n
    beta = tuple(b % r for b in beta) if beta is not None else (0,) * n
    w = tuple(w) if w is not None else sg.identity(n)
    c = Scalar.of(coeff) if coeff is not None else Scalar.one()
    if c.is_zero():
        return zero(r, n)
    return PbwElement(r, n, {(alpha, beta, w): c})


def _unit_beta(r: int, n: int, i: int, s: int) -> tuple[int, ...]:
    """beta vector of t_i^s t_{i+1}^{-s}."""
    beta = [0] * n
    beta[i - 1] = s % r
    beta[i] = (-s) % r
    return tuple(beta)


def e_pair(r: int, n: int, j: int, k: int) -> PbwElement:
    """The idempotent e_{j,k} = (1/r) sum_s t_j^s t_k^{-s}."""
    if j == k:
        return one(r, n)
    terms: dict[Monomial, Scalar] = {}
    frac = Scalar.of(Fraction(1, r))
    for s in range(r):
        beta = [0] * n
        beta[j - 1] = s % r
        beta[k - 1] = (-s) % r
        key = ((0,) * n, tuple(beta), sg.identity(n))
        cur = terms.get(key)
        terms[key] = frac if cur is None else cur + frac
    return PbwElement.make(r, n, terms)


def gen(r: int, n: int, kind: str, index: int = 0) -> PbwElement:
    """A generator in PBW normal form.

    kinds: 't' (t_j), 'X' (X_j), 'Xi' (X_j^{-1}), 'g' (g_i),
    'gi' (g_i^{-1} = g_i - (q - q^{-1}) e_i), 'e' (e_i), 'Th' (the
    intertwiner q g_i (1 - X_i X_{i+1}^{-1}) + (1 - q^2) e_i, stored
    normalized)."""
    j = index
    if kind in ("t", "X", "Xi"):
        if not 1 <= j <= n:
            raise IndexError(f"index {j} out of range 1..{n}")
    elif kind in ("g", "gi", "e", "Th"):
        if not 1 <= j <= n - 1:
            raise IndexError(f"index {j} out of range 1..{n-1}")
    else:
        raise ValueError(f"unknown generator kind {kind!r}")

    ident = sg.identity(n)
    if kind == "t":
        beta = [0] * n
        beta[j - 1] = 1 % r
        return monomial(r, n, beta=beta)
    if kind == "X":
        alpha = [0] * n
        alpha[j - 1] = 1
        return monomial(r, n, alpha=alpha)
    if kind == "Xi":
        alpha = [0] * n
        alpha[j - 1] = -1
        return monomial(r, n, alpha=alpha)
    if kind == "g":
        return monomial(r, n, w=sg.adjacent(n, j))
    if kind == "e":
        return e_pair(r, n, j, j + 1)
    if kind == "gi":
        qmq = Scalar.q() - Scalar.q_power(-1)
        return gen(r, n, "g", j) - gen(r, n, "e", j).smul(qmq)
    # intertwiner, normalized:
    #   q g_i - q X_i^{-1} X_{i+1} g_i + (q^2 - 1) e_i X_i^{-1} X_{i+1}
    q = Scalar.q()
    q2m1 = Scalar.q_power(2) - Scalar.one()
    alpha = [0] * n
    alpha[j - 1] = -1
    alpha[j] = 1
    alpha = tuple(alpha)
    terms: dict[Monomial, Scalar] = {}
    terms[((0,) * n, (0,) * n, sg.adjacent(n, j))] = q
    terms[(alpha, (0,) * n, sg.adjacent(n, j))] = -q
    frac = q2m1 * Fraction(1, r)
    for s in range(r):
        key = (alpha, _unit_beta(r, n, j, s), ident)
        cur = terms.get(key)
        terms[key] = frac if cur is None else cur + frac
    return PbwElement.make(r, n, terms)


# ---------------------------------------------------------------------------
# divided differences
# ---------------------------------------------------------------------------

def _dd_alpha(alpha: tuple[int, ...], i: int) -> list[tuple[tuple[int, ...], int]]:
    """Monomials of (X^alpha - X^{s_i alpha}) / (1 - X_i X_{i+1}^{-1}),
    as (exponent vector, +-1) pairs; exact for any integer exponents."""
    a, b = alpha[i - 1], alpha[i]
    if a == b:
        return []
    out = []
    lst = list(alpha)
    if a > b:
        for k in range(a - b):
            lst[i - 1] = b + k
            lst[i] = a - k
            out.append((tuple(lst), -1))
    else:
        for k in range(b - a):
            lst[i - 1] = a + k
            lst[i] = b - k
            out.append((tuple(lst), 1))
    return out


def divided_difference(f: PbwElement, i: int) -> PbwElement:
    """dd_i(f) with dd_i(f) * (1 - X_i X_{i+1}^{-1}) = f - s_i(f), for f a
    Laurent polynomial in the X's only."""
    if not f.x_part_only():
        raise ValueError("divided difference requires an X-only element")
    if not 1 <= i <= f.n - 1:
        raise IndexError(f"index {i} out of range 1..{f.n-1}")
    out: dict[Monomial, Scalar] = {}
    for (alpha, beta, w), c in f.terms.items():
        for kappa, sign in _dd_alpha(alpha, i):
            key = (kappa, beta, w)
            add = c if sign > 0 else -c
            cur = out.get(key)
            s = add if cur is None else cur + add
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return PbwElement(f.r, f.n, out)


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------

@lru_cache(maxsize=400_000)
def _lmul_mono(r: int, i: int, alpha: tuple[int, ...], beta: tuple[int, ...],
               w: sg.Perm) -> tuple[tuple[Monomial, Scalar], ...]:
    """g_i * X^alpha t^beta g_w in normal form, as (monomial, coeff) pairs."""
    n = len(alpha)
    sa = list(alpha)
    sa[i - 1], sa[i] = sa[i], sa[i - 1]
    sa = tuple(sa)
    sb = list(beta)
    sb[i - 1], sb[i] = sb[i], sb[i - 1]
    sb = tuple(sb)
    siw = sg.mult_left_s(i, w)
    lengthens = w.index(i) < w.index(i + 1)
    qmq = Scalar.q() - Scalar.q_power(-1)
    frac = qmq * Fraction(1, r)

    out: dict[Monomial, Scalar] = {}

    def acc(key: Monomial, c: Scalar) -> None:
        cur = out.get(key)
        s = c if cur is None else cur + c
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    acc((sa, sb, siw), Scalar.one())
    if not lengthens:
        # g_i g_w = g_{s_i w} + (q - q^{-1}) e_i g_w
        for s in range(r):
            eb = list(sb)
            eb[i - 1] = (eb[i - 1] + s) % r
            eb[i] = (eb[i] - s) % r
            acc((sa, tuple(eb), w), frac)
    for kappa, sign in _dd_alpha(alpha, i):
        c = frac if sign > 0 else -frac
        for s in range(r):
            eb = list(beta)
            eb[i - 1] = (eb[i - 1] + s) % r
            eb[i] = (eb[i] - s) % r
            acc((kappa, tuple(eb), w), c)
    return tuple(out.items())


def mult(a: PbwElement, b: PbwElement) -> PbwElement:
    """The product in PBW normal form."""
    _check_ranks(a, b)
    r, n = a.r, a.n
    if not a.terms or not b.terms:
        return zero(r, n)
    out: dict[Monomial, Scalar] = {}
    groups: dict[sg.Perm, list] = {}
    for (alpha, beta, w), c in a.terms.items():
        groups.setdefault(w, []).append((alpha, beta, c))
    for w, lefts in groups.items():
        cur = b.terms
        for i in reversed(sg.reduced_word(w)):
            nxt: dict[Monomial, Scalar] = {}
            for (ga, gb, gw), c in cur.items():
                for m2, d in _lmul_mono(r, i, ga, gb, gw):
                    cd = c * d
                    prev = nxt.get(m2)
                    s = cd if prev is None else prev + cd
                    if s.is_zero():
                        nxt.pop(m2, None)
                    else:
                        nxt[m2] = s
            cur = nxt
            if len(cur) > MAX_SUPPORT:
                raise ResourceLimitError(
                    f"support exceeded {MAX_SUPPORT} during multiplication")
        for alpha, beta, c in lefts:
            for (ga, gb, gw), d in cur.items():
                key = (tuple(x + y for x, y in zip(alpha, ga)),
                       tuple((x + y) % r for x, y in zip(beta, gb)),
                       gw)
                cd = c * d
                prev = out.get(key)
                s = cd if prev is None else prev + cd
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        if len(out) > MAX_SUPPORT:
            raise ResourceLimitError(
                f"support exceeded {MAX_SUPPORT} during multiplication")
    return PbwElement(r, n, out)


def mult_all(*elems: PbwElement) -> PbwElement:
    out = elems[0]
    for e in elems[1:]:
        out = mult(out, e)
    return out


# ---------------------------------------------------------------------------
# center
# ---------------------------------------------------------------------------

def orbit_sum(r: int, n: int, alpha, beta) -> PbwElement:
    """Sum of X^{w alpha} t^{w beta} over the symmetric-group orbit of the
    pair (alpha, beta)."""
    alpha = tuple(alpha)
    beta = tuple(b % r for b in beta)
    ident = sg.identity(n)
    seen = set()
    terms: dict[Monomial, Scalar] = {}
    for w in sg.all_perms(n):
        pair = (sg.apply_to_tuple(w, alpha), sg.apply_to_tuple(w, beta))
        if pair in seen:
            continue
        seen.add(pair)
        terms[(pair[0], pair[1], ident)] = Scalar.one()
    return PbwElement(r, n, terms)


def is_central(z: PbwElement) -> bool:
    """Commutation with the generating set t_1, X_1, g_1..g_{n-1}."""
    r, n = z.r, z.n
    gens = [gen(r, n, "t", 1), gen(r, n, "X", 1)]
    gens += [gen(r, n, "g", i) for i in range(1, n)]
    return all((mult(h, z) - mult(z, h)).is_zero() for h in gens)


# ---------------------------------------------------------------------------
# left coset expansion
# ---------------------------------------------------------------------------

def expand_left_cosets(a: PbwElement, mu: sg.Composition,
                       verify: bool = True) -> dict[sg.Perm, PbwElement]:
    """Write a = sum over tau in O(mu) of g_tau * h_tau with every h_tau in
    the parabolic subalgebra (g-part inside S_mu).

    Each monomial X^alpha t^beta g_w with w = tau u contributes
    X^{tau^{-1} alpha} t^{tau^{-1} beta} g_u to h_tau; the defect
    a - g_tau * (that term) is supported on strictly shorter permutations
    and is reprocessed, so the loop terminates.
    """
    r, n = a.r, a.n
    sg.check_composition(mu, n)
    ident = sg.identity(n)
    out: dict[sg.Perm, dict[Monomial, Scalar]] = {}
    buckets: dict[int, dict[Monomial, Scalar]] = {}
    for m, c in a.terms.items():
        buckets.setdefault(sg.length(m[2]), {})[m] = c

    def push(m: Monomial, c: Scalar) -> None:
        lv = sg.length(m[2])
        b = buckets.setdefault(lv, {})
        cur = b.get(m)
        s = c if cur is None else cur + c
        if s.is_zero():
            b.pop(m, None)
        else:
            b[m] = s

    while buckets:
        lv = max(buckets)
        bucket = buckets.pop(lv)
        while bucket:
            m, c = bucket.popitem()
            if c.is_zero():
                continue
            alpha, beta, w = m
            tau, u = sg.coset_factorize(w, mu)
            tinv = sg.inverse(tau)
            gamma = sg.apply_to_tuple(tinv, alpha)
            delta = sg.apply_to_tuple(tinv, beta)
            hmono = (gamma, delta, u)
            slot = out.setdefault(tau, {})
            cur = slot.get(hmono)
            s = c if cur is None else cur + c
            if s.is_zero():
                slot.pop(hmono, None)
            else:
                slot[hmono] = s
            if tau == ident:
                continue  # g_tau * h == h-monomial itself, no defect
            prod = mult(monomial(r, n, w=tau), PbwElement(r, n, {hmono: Scalar.one()}))
            for m2, d in prod.terms.items():
                if m2 == m:
                    continue  # leading term, coefficient exactly 1
                push(m2, -(c * d))

    result = {tau: PbwElement(r, n, terms) for tau, terms in out.items() if terms}
    if verify:
        total = zero(r, n)
        for tau, h in result.items():
            total = total + mult(monomial(r, n, w=tau), h)
        assert (total - a).is_zero(), "coset expansion failed to re-multiply"
        gens_mu = set(sg.young_gens(mu))
        for h in result.values():
            for (_, _, u) in h.terms:
                assert set(sg.reduced_word(u)) <= gens_mu, \
                    "coset expansion left the parabolic subalgebra"
    return result


# ---------------------------------------------------------------------------
# identity families (shared between the symbolic engine and matrix modules)
# ---------------------------------------------------------------------------

class PbwCtx:
    """Evaluation context for identity checking inside the algebra itself."""

    def __init__(self, r: int, n: int):
        self.r = r
        self.n = n

    def one(self):
        return one(self.r, self.n)

    def gen(self, kind: str, index: int):
        return gen(self.r, self.n, kind, index)

    def e_pair(self, j: int, k: int):
        return e_pair(self.r, self.n, j, k)

    def x_monomial(self, alpha):
        return monomial(self.r, self.n, alpha=alpha)

    def t_monomial(self, beta):
        return monomial(self.r, self.n, beta=beta)

    def mul(self, a, b):
        return mult(a, b)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def smul(self, c, a):
        return a.smul(c)

    def is_zero(self, a):
        return a.is_zero()

    def power(self, a, m: int):
        out = self.one()
        for _ in range(m):
            out = self.mul(out, a)
        return out


class RelationReport:
    """Outcome of an identity suite: named families of named cases."""

    def __init__(self):
        self.families: list[tuple[str, list[tuple[str, bool]]]] = []

    def add_family(self, name: str, cases: list[tuple[str, bool]]) -> None:
        self.families.append((name, cases))

    def extend(self, other: "RelationReport") -> None:
        self.families.extend(other.families)

    @property
    def ok(self) -> bool:
        return all(ok for _, cases in self.families for _, ok in cases)

    def family_count(self) -> int:
        return len(self.families)

    def failures(self) -> list[str]:
        return [f"{fam}: {case}"
                for fam, cases in self.families for case, ok in cases if not ok]

    def to_json(self) -> dict:
        return {
            "families": [
                {"name": fam,
                 "cases": [{"name": c, "pass": ok} for c, ok in cases],
                 "pass": all(ok for _, ok in cases)}
                for fam, cases in self.families
            ],
            "pass": self.ok,
        }

    def __repr__(self):
        lines = []
        for fam, cases in self.families:
            status = "PASS" if all(ok for _, ok in cases) else "FAIL"
            lines.append(f"{status} {fam} ({len(cases)} checks)")
        return "\n".join(lines)


def _rand_x_laurent(ctx, rng, window: int = 2, nterms: int = 3):
    """A random Laurent polynomial in the X's with small integer
    coefficients, plus its exponent list for divided differences."""
    monos = []
    for _ in range(nterms):
        alpha = tuple(rng.randint(-window, window) for _ in range(ctx.n))
        coeff = rng.randint(1, 3) * rng.choice((1, -1))
        monos.append((alpha, coeff))
    val = None
    for alpha, coeff in monos:
        term = ctx.smul(Fraction(coeff), ctx.x_monomial(alpha))
        val = term if val is None else ctx.add(val, term)
    return monos, val


def _eval_x_monos(ctx, monos):
    val = None
    for alpha, coeff in monos:
        term = ctx.smul(Fraction(coeff), ctx.x_monomial(alpha))
        val = term if val is None else ctx.add(val, term)
    if val is None:
        val = ctx.smul(Fraction(0), ctx.one())
    return val


def core_families(ctx, rng=None, dd_samples: int = 20) -> RelationReport:
    """The defining relations plus the derived identities used throughout:
    braid, quadratic, t-relations, push rules, slide rules, commutator
    formula on random Laurent polynomials.  Evaluates inside any context
    (the symbolic algebra or a module's matrices)."""
    r, n = ctx.r, ctx.n
    qmq = Scalar.q() - Scalar.q_power(-1)
    rep = RelationReport()

    def zero_case(val) -> bool:
        return ctx.is_zero(val)

    def eq_case(a, b) -> bool:
        return ctx.is_zero(ctx.sub(a, b))

    g = [None] + [ctx.gen("g", i) for i in range(1, n)]
    t = [None] + [ctx.gen("t", j) for j in range(1, n + 1)]
    X = [None] + [ctx.gen("X", j) for j in range(1, n + 1)]
    Xi = [None] + [ctx.gen("Xi", j) for j in range(1, n + 1)]
    e = [None] + [ctx.gen("e", i) for i in range(1, n)]

    rep.add_family("g-braid-far", [
        (f"g{i}g{j}=g{j}g{i}", eq_case(ctx.mul(g[i], g[j]), ctx.mul(g[j], g[i])))
        for i in range(1, n) for j in range(i + 2, n)])

    rep.add_family("g-braid", [
        (f"g{i}g{i+1}g{i}=g{i+1}g{i}g{i+1}",
         eq_case(ctx.mul(ctx.mul(g[i], g[i + 1]), g[i]),
                 ctx.mul(ctx.mul(g[i + 1], g[i]), g[i + 1])))
        for i in range(1, n - 1)])

    rep.add_family("t-abelian", [
        (f"t{i}t{j}=t{j}t{i}", eq_case(ctx.mul(t[i], t[j]), ctx.mul(t[j], t[i])))
        for i in range(1, n + 1) for j in range(i + 1, n + 1)])

    rep.add_family("g-t-slide", [
        (f"g{i}t{j}=t{{s_i(j)}}g{i}",
         eq_case(ctx.mul(g[i], t[j]),
                 ctx.mul(t[sg.adjacent(n, i)[j - 1]], g[i])))
        for i in range(1, n) for j in range(1, n + 1)])

    rep.add_family("t-order", [
        (f"t{j}^r=1", eq_case(ctx.power(t[j], r), ctx.one()))
        for j in range(1, n + 1)])

    rep.add_family("g-quadratic", [
        (f"g{i}^2=1+(q-q^-1)e{i}g{i}",
         eq_case(ctx.mul(g[i], g[i]),
                 ctx.add(ctx.one(), ctx.smul(qmq, ctx.mul(e[i], g[i])))))
        for i in range(1, n)])

    x1_cases = [("X1 Xi1 = 1", eq_case(ctx.mul(X[1], Xi[1]), ctx.one()))]
    if n >= 2:
        x1_cases.append((
            "g1X1g1X1=X1g1X1g1",
            eq_case(ctx.mul(ctx.mul(ctx.mul(g[1], X[1]), g[1]), X[1]),
                    ctx.mul(ctx.mul(ctx.mul(X[1], g[1]), X[1]), g[1]))))
    for i in range(2, n):
        x1_cases.append((f"g{i}X1=X1g{i}",
                         eq_case(ctx.mul(g[i], X[1]), ctx.mul(X[1], g[i]))))
    for j in range(1, n + 1):
        x1_cases.append((f"t{j}X1=X1t{j}",
                         eq_case(ctx.mul(t[j], X[1]), ctx.mul(X[1], t[j]))))
    rep.add_family("x1-defining", x1_cases)

    gi = [None] + [ctx.gen("gi", i) for i in range(1, n)]
    rep.add_family("g-inverse", [
        (f"g{i}(g{i}-(q-q^-1)e{i})=1",
         eq_case(ctx.mul(g[i], gi[i]), ctx.one()) and
         eq_case(ctx.mul(gi[i], g[i]), ctx.one()))
        for i in range(1, n)])

    rep.add_family("e-idempotent", [
        (f"e{i}^2=e{i} and e{i}g{i}=g{i}e{i}",
         eq_case(ctx.mul(e[i], e[i]), e[i]) and
         eq_case(ctx.mul(e[i], g[i]), ctx.mul(g[i], e[i])))
        for i in range(1, n)])

    rep.add_family("e-slide", [
        (f"e({j},{k})g{i}=g{i}e(s{i}({j}),s{i}({k}))",
         eq_case(ctx.mul(ctx.e_pair(j, k), g[i]),
                 ctx.mul(g[i], ctx.e_pair(sg.adjacent(n, i)[j - 1],
                                          sg.adjacent(n, i)[k - 1]))))
        for i in range(1, n) for j in range(1, n + 1) for k in range(j, n + 1)])

    # X_{i+1} built by conjugation agrees with the PBW symbol
    tower_cases = []
    for i in range(1, n):
        built = ctx.mul(ctx.mul(g[i], X[i]), g[i])
        tower_cases.append((f"g{i}X{i}g{i}=X{i+1}", eq_case(built, X[i + 1])))
        built_inv = ctx.mul(ctx.mul(gi[i], Xi[i]), gi[i])
        tower_cases.append((f"gi{i}Xi{i}gi{i}=Xi{i+1}", eq_case(built_inv, Xi[i + 1])))
    rep.add_family("x-tower", tower_cases)

    rep.add_family("x-far-commute", [
        (f"g{i}X{j}=X{j}g{i}", eq_case(ctx.mul(g[i], X[j]), ctx.mul(X[j], g[i])))
        for i in range(1, n) for j in range(1, n + 1) if j not in (i, i + 1)])

    fam = []
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            fam.append((f"X{j}X{k}=X{k}X{j}",
                        eq_case(ctx.mul(X[j], X[k]), ctx.mul(X[k], X[j]))))
            fam.append((f"t{j}X{k}=X{k}t{j}",
                        eq_case(ctx.mul(t[j], X[k]), ctx.mul(X[k], t[j]))))
    rep.add_family("xt-abelian", fam)

    fam = []
    for i in range(1, n):
        fam.append((f"g{i}X{i}",
                    eq_case(ctx.mul(g[i], X[i]),
                            ctx.sub(ctx.mul(X[i + 1], g[i]),
                                    ctx.smul(qmq, ctx.mul(e[i], X[i + 1]))))))
        fam.append((f"g{i}X{i+1}",
                    eq_case(ctx.mul(g[i], X[i + 1]),
                            ctx.add(ctx.mul(X[i], g[i]),
                                    ctx.smul(qmq, ctx.mul(e[i], X[i + 1]))))))
        fam.append((f"g{i}Xi{i}",
                    eq_case(ctx.mul(g[i], Xi[i]),
                            ctx.add(ctx.mul(Xi[i + 1], g[i]),
                                    ctx.smul(qmq, ctx.mul(e[i], Xi[i]))))))
        fam.append((f"g{i}Xi{i+1}",
                    eq_case(ctx.mul(g[i], Xi[i + 1]),
                            ctx.sub(ctx.mul(Xi[i], g[i]),
                                    ctx.smul(qmq, ctx.mul(e[i], Xi[i]))))))
    rep.add_family("x-push", fam)

    fam = []
    for i in range(1, n):
        for beta in _all_betas(r, n):
            sbeta = sg.apply_to_tuple(sg.adjacent(n, i), beta)
            fam.append((f"e{i}t^{beta}",
                        eq_case(ctx.mul(e[i], ctx.t_monomial(beta)),
                                ctx.mul(ctx.t_monomial(sbeta), e[i]))))
    rep.add_family("e-t-slide", fam)

    fam = []
    if rng is not None:
        for s in range(dd_samples):
            monos, fval = _rand_x_laurent(ctx, rng)
            for i in range(1, n):
                si = sg.adjacent(n, i)
                smonos = [(sg.apply_to_tuple(si, alpha), c) for alpha, c in monos]
                sfval = _eval_x_monos(ctx, smonos)
                dd = []
                for alpha, c in monos:
                    for kappa, sign in _dd_alpha(alpha, i):
                        dd.append((kappa, c * sign))
                ddval = _eval_x_monos(ctx, dd)
                lhs = ctx.sub(ctx.mul(g[i], fval), ctx.mul(sfval, g[i]))
                rhs = ctx.smul(qmq, ctx.mul(e[i], ddval))
                fam.append((f"sample{s}-i{i}", eq_case(lhs, rhs)))
    rep.add_family("dd-commutator", fam)
    return rep


def _all_betas(r: int, n: int):
    if n == 0:
        yield ()
        return
    for rest in _all_betas(r, n - 1):
        for b in range(r):
            yield rest + (b,)


def theta_family(ctx) -> RelationReport:
    """The intertwiner identities: the square formula and the X-swap."""
    r, n = ctx.r, ctx.n
    rep = RelationReport()
    q2 = Scalar.q_power(2)
    one_minus_q2 = Scalar.one() - q2
    cases = []
    for i in range(1, n):
        th = ctx.gen("Th", i)
        e_i = ctx.gen("e", i)
        X_i, X_i1 = ctx.gen("X", i), ctx.gen("X", i + 1)
        Xi_i, Xi_i1 = ctx.gen("Xi", i), ctx.gen("Xi", i + 1)
        # square: (1-q^2)^2 (e_i - 1) + (1 - q^2 X_i X_{i+1}^{-1})(1 - q^2 X_{i+1} X_i^{-1})
        lhs = ctx.mul(th, th)
        a = ctx.smul(one_minus_q2 * one_minus_q2, ctx.sub(e_i, ctx.one()))
        f1 = ctx.sub(ctx.one(), ctx.smul(q2, ctx.mul(X_i, Xi_i1)))
        f2 = ctx.sub(ctx.one(), ctx.smul(q2, ctx.mul(X_i1, Xi_i)))
        rhs = ctx.add(a, ctx.mul(f1, f2))
        cases.append((f"Th{i}^2", ctx.is_zero(ctx.sub(lhs, rhs))))
        cases.append((f"Th{i}X{i}=X{i+1}Th{i}",
                      ctx.is_zero(ctx.sub(ctx.mul(th, X_i), ctx.mul(X_i1, th)))))
        cases.append((f"Th{i}X{i+1}=X{i}Th{i}",
                      ctx.is_zero(ctx.sub(ctx.mul(th, X_i1), ctx.mul(X_i, th)))))
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            X_j = ctx.gen("X", j)
            cases.append((f"Th{i}X{j}=X{j}Th{i}",
                          ctx.is_zero(ctx.sub(ctx.mul(th, X_j), ctx.mul(X_j, th)))))
    rep.add_family("theta", cases)
    return rep


def xggx_family(ctx, mus=None) -> RelationReport:
    """X_1 g_w for w the transposition (1, m+1): the expansion of X_1 past
    the full coset word, with one g replaced by an X in each correction
    term."""
    r, n = ctx.r, ctx.n
    rep = RelationReport()
    if mus is None:
        mus = _all_compositions(r, n)
    qmq = Scalar.q() - Scalar.q_power(-1)
    cases = []
    for mu in mus:
        ps = sg.prefix_sums(mu)
        for k in range(r):
            m = ps[k]
            name = f"mu={mu},k={k}"
            if m == 0:
                cases.append((name, True))  # w = identity: X_1 * 1 = 1 * X_1
                continue
            if m >= n:
                continue  # transposition (1, m+1) needs position m+1
            X1 = ctx.gen("X", 1)
            # word of the transposition (1, m+1): g_m .. g_2 g_1 g_2 .. g_m
            letters = list(range(m, 0, -1)) + list(range(2, m + 1))
            gw = _mul_chain(ctx, [ctx.gen("g", a) for a in letters])
            lhs = ctx.mul(X1, gw)
            rhs = ctx.mul(gw, ctx.gen("X", m + 1))
            for l in range(1, m + 1):
                # replace the (unique ascending) letter l with X_{l+1}
                pos = (m - 1) if l == 1 else (m - 1) + (l - 1)
                factors = [ctx.gen("X", l + 1) if idx == pos else ctx.gen("g", a)
                           for idx, a in enumerate(letters)]
                term = ctx.mul(_mul_chain(ctx, factors), ctx.e_pair(l, m + 1))
                rhs = ctx.sub(rhs, ctx.smul(qmq, term))
            cases.append((name, ctx.is_zero(ctx.sub(lhs, rhs))))
    rep.add_family("x-coset-push", cases)
    return rep


def _mul_chain(ctx, factors):
    out = ctx.one()
    for f in factors:
        out = ctx.mul(out, f)
    return out


def _all_compositions(parts: int, total: int):
    return sg.compositions(parts, total)


# ---------------------------------------------------------------------------
# public check entry points
# ---------------------------------------------------------------------------

def check_relations(r: int, n: int, rng=None, dd_samples: int = 20) -> RelationReport:
    """Evaluate the defining and derived identities symbolically; every case
    must normalize to zero."""
    import random
    if rng is None:
        rng = random.Random(0)
    return core_families(PbwCtx(r, n), rng=rng, dd_samples=dd_samples)


def check_theta(r: int, n: int) -> RelationReport:
    return theta_family(PbwCtx(r, n))


def check_xggx(r: int, n: int, mu=None, k=None) -> RelationReport:
    ctx = PbwCtx(r, n)
    if mu is None:
        return xggx_family(ctx)
    rep = RelationReport()
    full = xggx_family(ctx, mus=[tuple(mu)])
    if k is None:
        return full
    name, cases = full.families[0]
    rep.add_family(name, [c for c in cases if c[0].endswith(f"k={k}")])
    return rep


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def element_to_json(a: PbwElement) -> dict:
    return {
        "r": a.r,
        "n": a.n,
        "terms": [
            {"alpha": list(alpha), "beta": list(beta), "w": list(w),
             "coeff": scalar_to_json(c, a.r)}
            for (alpha, beta, w), c in a.sorted_terms()
        ],
    }


def element_from_json(data: dict) -> PbwElement:
    r, n = data["r"], data["n"]
    terms = {}
    for td in data["terms"]:
        key = (tuple(td["alpha"]), tuple(td["beta"]), tuple(td["w"]))
        terms[key] = scalar_from_json(td["coeff"], r)
    return PbwElement.make(r, n, terms)
