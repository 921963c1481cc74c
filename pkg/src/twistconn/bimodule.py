"""Bimodule structure on the product module and the induced swap morphism.

Free modules carry the symmetric bimodule structure (a . e_k = e_k . a).
A bimodule connection on a factor is a connection together with a swap map
from 1-forms-tensor-module to module-tensor-1-forms, specified by its
values on d(gen) ⊗ e_k and extended by bimodule linearity; the classical
choice is the flip.

The product module becomes a bimodule for the left action that carries the
scalars across with the left module twist (e-block) and the algebra twist
(f-block).  The connection's failure to be left-linear is measured by a
degree-1 swap map assembled from four pieces, one per (form side, block)
pair.  Evaluation normalizes the 1-form input to the generator shapes
d(x^c) ⊗ 1 and x^i ⊗ d(y^c) by moving trailing scalars across the
balanced tensor onto the module argument, which is exactly how the
defining formulas are stated.

Each checker verifies one hypothesis or lemma of the bimodule theory on
bounded monomial bases: the compatibility equations for the outer swap
pieces together with their module-morphism properties (mechanizing the
"if and only if"), the unconditional morphism properties of the two mixed
pieces, the commutation of the two actions, and finally the left Leibniz
identity of the product connection with respect to the assembled swap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .connections import ModuleConnection
from .forms import Caps, Form, Word, render_word, word_degree, \
    word_differential, word_letters, word_mul
from .reports import CheckResult, failed, inadmissible, passed
from .tdga import ProductForm, enumerate_monomials
from .twist import AlgebraTwist, LeftModuleTwist, RightModuleTwist
from .product import ProductConnection, ProductVector, act_right, \
    act_right_form, f_free_to_naive, f_naive_to_free, iter_naive_basis


class FormSwap:
    """Bimodule morphism on a free module, given on d(gen) ⊗ basis.

    ``values[l][k]`` is the 1-form paired with e_l in the image of
    d(gen) ⊗ e_k; extension to general inputs uses bimodule linearity
    over the symmetric structure.  The classical flip has identity-times-dgen
    values.
    """

    def __init__(self, gen: str, rank: int, values):
        self.gen = gen
        self.rank = rank
        self.values = [list(row) for row in values]
        if len(self.values) != rank or any(len(r) != rank for r in self.values):
            raise ValueError("swap values must be a rank x rank matrix")
        for row in self.values:
            for entry in row:
                if entry.gen != gen:
                    raise ValueError("swap generator mismatch")
                if not entry.is_zero and not entry.is_homogeneous(1):
                    raise ValueError("swap values must be 1-forms")

    @classmethod
    def flip(cls, gen: str, rank: int) -> "FormSwap":
        d = Form.d_gen(gen)
        zero = Form.zero(gen)
        return cls(gen, rank,
                   [[d if i == j else zero for j in range(rank)]
                    for i in range(rank)])

    def apply(self, one_form: Form, coords) -> list[Form]:
        """Swap a 1-form past a coordinate vector of degree-0 entries."""
        if one_form.gen != self.gen:
            raise ValueError("swap generator mismatch")
        if not one_form.is_zero and not one_form.is_homogeneous(1):
            raise ValueError("swap needs a homogeneous 1-form")
        out = [Form.zero(self.gen) for _ in range(self.rank)]
        for w, c in one_form.terms.items():
            left = Form.word(self.gen, (w[0],), c)
            right = Form.word(self.gen, (w[1],))
            for k in range(self.rank):
                if coords[k].is_zero:
                    continue
                tail = right * coords[k]
                for l in range(self.rank):
                    entry = self.values[l][k]
                    if not entry.is_zero:
                        out[l] = out[l] + left * entry * tail
        return out


def check_swap_pair_compatible(conn: ModuleConnection, swap: FormSwap,
                               left_potential, caps: Caps) -> CheckResult:
    """Whether a left-connection candidate matches the right connection.

    The candidate is given by its coordinate formula (componentwise
    differential plus a matrix of 1-forms multiplying from the left); it is
    compatible when the swap map carries it onto the right connection on
    every bounded basis vector.
    """
    gen = conn.gen
    E = caps.max_exponent
    cases = 0
    for k in range(conn.rank):
        for i in range(E + 1):
            cases += 1
            vec = conn.zero_vector()
            vec[k] = Form.gen_power(gen, i)
            left = [vec[l].d() for l in range(conn.rank)]
            for l in range(conn.rank):
                for p in range(conn.rank):
                    entry = left_potential[l][p]
                    if not entry.is_zero and not vec[p].is_zero:
                        left[l] = left[l] + entry * vec[p]
            swapped = [Form.zero(gen) for _ in range(conn.rank)]
            for l in range(conn.rank):
                if left[l].is_zero:
                    continue
                basis = conn.zero_vector()
                basis[l] = Form.unit(gen)
                for p, res in enumerate(swap.apply(left[l], basis)):
                    swapped[p] = swapped[p] + res
            if swapped != conn.nabla(vec):
                return failed("swap-pair-compatible",
                              f"left candidate differs at e_{k + 1} "
                              f"{gen}^{i}", cases, generator=gen)
    return passed(f"swap-pair-compatible-{gen}", cases)


def check_bimodule_connection(conn: ModuleConnection, swap: FormSwap,
                              caps: Caps) -> CheckResult:
    """Defining identity of a bimodule connection on monomial inputs."""
    if swap.gen != conn.gen or swap.rank != conn.rank:
        raise ValueError("swap and connection must share module data")
    gen = conn.gen
    E = caps.max_exponent
    cases = 0
    for c_exp in range(E + 1):
        a = Form.gen_power(gen, c_exp)
        da = a.d()
        for k in range(conn.rank):
            for i in range(E + 1):
                cases += 1
                vec = conn.zero_vector()
                vec[k] = Form.gen_power(gen, i)
                lhs_vec = conn.zero_vector()
                lhs_vec[k] = Form.gen_power(gen, c_exp + i)
                lhs = conn.nabla(lhs_vec)
                rhs = [a * w for w in conn.nabla(vec)]
                for l, extra in enumerate(swap.apply(da, vec)):
                    rhs[l] = rhs[l] + extra
                if lhs != rhs:
                    return failed("bimodule-connection",
                                  f"gen^{c_exp} . e_{k + 1} gen^{i}", cases,
                                  generator=gen)
    return passed(f"bimodule-connection-{gen}", cases)


# ---------------------------------------------------------------------------
# left action on the product module
# ---------------------------------------------------------------------------

def act_left(twist: AlgebraTwist, rmt: RightModuleTwist, lmt: LeftModuleTwist,
             w: ProductForm, pv: ProductVector) -> ProductVector:
    """Left action of a degree-0 algebra element on the product module."""
    if not w.is_homogeneous(0):
        raise ValueError("left action needs a degree-0 element")
    m, n = pv.ranks
    e_out = [ProductForm.zero() for _ in range(m)]
    f_out = [ProductForm.zero() for _ in range(n)]
    for (wx, wy), c in w.terms.items():
        i, j = wx[0], wy[0]
        mono = ProductForm.pair(wx, wy, c)
        t_pow = lmt.matrix_power(j)
        for k in range(m):
            if pv.e[k].is_zero:
                continue
            shifted = twist.mul(mono, pv.e[k])
            row = t_pow[k]
            for l in range(m):
                if row[l]:
                    e_out[l] = e_out[l] + shifted.scale(row[l])
        s_back = rmt.matrix_power(-i)
        for k in range(n):
            if pv.f[k].is_zero:
                continue
            shifted = twist.mul(mono, pv.f[k])
            row = s_back[k]
            for l in range(n):
                if row[l]:
                    f_out[l] = f_out[l] + shifted.scale(row[l])
    return ProductVector(e_out, f_out, pv.flags)


def check_bimodule_axiom(twist: AlgebraTwist, rmt: RightModuleTwist,
                         lmt: LeftModuleTwist, m: int, caps: Caps) -> CheckResult:
    """Left and right actions commute on bounded monomial bases."""
    n = rmt.rank
    E = caps.max_exponent
    monos = [ProductForm.pair(wx, wy) for wx, wy in enumerate_monomials(E)]
    basis: list[tuple[str, ProductVector]] = []
    for k in range(m):
        for i in range(E + 1):
            for j in range(E + 1):
                pv = ProductVector.e_basis(m, n, k, ProductForm.monomial(i, j))
                basis.append((f"e_{k + 1} x^{i} ⊗ y^{j}", pv))
    for k in range(n):
        for i in range(E + 1):
            for j in range(E + 1):
                naive = [ProductForm.zero()] * n
                naive[k] = ProductForm.monomial(i, j)
                pv = ProductVector([ProductForm.zero()] * m,
                                   f_naive_to_free(rmt, naive))
                basis.append((f"x^{i} ⊗ f_{k + 1} y^{j}", pv))
    cases = 0
    for label, pv in basis:
        for wl in monos:
            for wr in monos:
                cases += 1
                lhs = act_left(twist, rmt, lmt, wl, act_right(twist, pv, wr))
                rhs = act_right(twist, act_left(twist, rmt, lmt, wl, pv), wr)
                if lhs != rhs:
                    return failed("bimodule-axiom",
                                  f"{label} between {wl} and {wr}", cases)
    return passed("bimodule-axiom", cases)


# ---------------------------------------------------------------------------
# the degree-1 swap on the product module
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _right_normal(a: int, b: int) -> tuple[tuple[int, int, int], ...]:
    """t^a dt t^b as a sum of d(t^c) t^e, returned as (c, e, coeff) triples."""
    if a == 0:
        return ((1, b, 1),)
    acc: dict[tuple[int, int], int] = {(a + 1, b): 1}
    for s in range(a):
        r = a - s
        for c, e, co in _right_normal(s, r + b):
            key = (c, e)
            acc[key] = acc.get(key, 0) - co
            if not acc[key]:
                del acc[key]
    return tuple((c, e, co) for (c, e), co in sorted(acc.items()))


class ProductSwap:
    """The degree-1 swap carrying 1-forms past the product module.

    Assembled from the left module twist and the e-factor swap (x-form on
    the e-block), the inverse right module twist (x-form on the f-block),
    the left module twist again (y-form on the e-block) and the f-factor
    swap behind the algebra twist (y-form on the f-block).
    """

    def __init__(self, twist: AlgebraTwist, rmt: RightModuleTwist,
                 lmt: LeftModuleTwist, swap_e: FormSwap, swap_f: FormSwap):
        if swap_e.gen != "x" or swap_f.gen != "y":
            raise ValueError("expected an x-swap and a y-swap")
        if swap_f.rank != rmt.rank or swap_e.rank != lmt.rank:
            raise ValueError("swap ranks must match the module twists")
        self.twist = twist
        self.rmt = rmt
        self.lmt = lmt
        self.swap_e = swap_e
        self.swap_f = swap_f

    @property
    def m(self) -> int:
        return self.swap_e.rank

    @property
    def n(self) -> int:
        return self.swap_f.rank

    def apply(self, one_form: ProductForm, pv: ProductVector) -> ProductVector:
        """Evaluate the swap on (1-form) ⊗ (degree-0 module element)."""
        if not one_form.is_zero and not one_form.is_homogeneous(1):
            raise ValueError("swap needs a homogeneous 1-form")
        if not pv.is_degree(0):
            raise ValueError("swap needs a degree-0 module element")
        out = ProductVector.zero(self.m, self.n)
        for (wx, wy), c in one_form.terms.items():
            if word_degree(wx) == 1:
                j = wy[0]
                for cc, tail, co in _right_normal(wx[0], wx[1]):
                    moved = act_left(self.twist, self.rmt, self.lmt,
                                     ProductForm.monomial(tail, j, c * co), pv)
                    out = out + self._generator_x(cc, moved)
            else:
                i = wx[0]
                for cc, tail, co in _right_normal(wy[0], wy[1]):
                    moved = act_left(self.twist, self.rmt, self.lmt,
                                     ProductForm.monomial(0, tail, c * co), pv)
                    out = out + self._generator_y(i, cc, moved)
        return out

    # -- generator inputs -------------------------------------------------
    def _generator_x(self, cc: int, pv: ProductVector) -> ProductVector:
        """Swap of d(x^cc) ⊗ 1 past pv."""
        e_out = [ProductForm.zero() for _ in range(self.m)]
        f_out = [ProductForm.zero() for _ in range(self.n)]
        d_pow = Form.gen_power("x", cc).d()
        # e-block: the e-factor swap acts on the x-form and the coordinates
        for k in range(self.m):
            if pv.e[k].is_zero:
                continue
            for (wxk, wyk), c in pv.e[k].terms.items():
                vec = [Form.zero("x")] * self.m
                vec[k] = Form.word("x", wxk)
                for l, res in enumerate(self.swap_e.apply(d_pow, vec)):
                    for w, cw in res.terms.items():
                        f2 = ProductForm({(w, wyk): cw * c})
                        e_out[l] = e_out[l] + f2
        # f-block: two inverse twists compose into one matrix power
        naive = f_free_to_naive(self.rmt, pv.f)
        for k in range(self.n):
            for (wxk, wyk), c in naive[k].terms.items():
                i2, j2 = wxk[0], wyk[0]
                piece = ProductForm(
                    {(word_mul(w, (i2,)), wyk): Fraction(s)
                     for w, s in word_differential((cc,)).items()})
                row = self.rmt.matrix_power(-(i2 + cc))[k]
                for p in range(self.n):
                    if row[p]:
                        f_out[p] = f_out[p] + piece.scale(c * row[p])
        return ProductVector(e_out, f_out, pv.flags)

    def _generator_y(self, i: int, cc: int, pv: ProductVector) -> ProductVector:
        """Swap of x^i ⊗ d(y^cc) past pv."""
        twist = self.twist
        e_out = [ProductForm.zero() for _ in range(self.m)]
        f_out = [ProductForm.zero() for _ in range(self.n)]
        d_words = word_differential((cc,))
        # e-block: carry y^cc across with the left module twist, then d
        for k in range(self.m):
            if pv.e[k].is_zero:
                continue
            for (wxk, wyk), c in pv.e[k].terms.items():
                i2, j2 = wxk[0], wyk[0]
                scale = twist.qpow(cc * i2) * c
                piece = ProductForm(
                    {((i + i2,), word_mul(w, (j2,))): Fraction(s)
                     for w, s in d_words.items()})
                row = self.lmt.matrix_power(cc)[k]
                for l in range(self.m):
                    if row[l]:
                        e_out[l] = e_out[l] + piece.scale(scale * row[l])
        # f-block: algebra twist past the scalar, then the f-factor swap
        naive = f_free_to_naive(self.rmt, pv.f)
        d_form = Form.gen_power("y", cc).d()
        for k in range(self.n):
            for (wxk, wyk), c in naive[k].terms.items():
                i2, j2 = wxk[0], wyk[0]
                scale = twist.qpow(cc * i2) * c
                vec = [Form.zero("y")] * self.n
                vec[k] = Form.word("y", wyk)
                res = self.swap_f.apply(d_form, vec)
                row_cache = self.rmt.matrix_power(-(i + i2))
                for p in range(self.n):
                    if res[p].is_zero:
                        continue
                    piece = ProductForm({((i + i2,), w): cw
                                         for w, cw in res[p].terms.items()})
                    row = [row_cache[p][qq] for qq in range(self.n)]
                    for qq in range(self.n):
                        if row[qq]:
                            f_out[qq] = f_out[qq] + piece.scale(scale * row[qq])
        return ProductVector(e_out, f_out, pv.flags)


# ---------------------------------------------------------------------------
# hypothesis checkers for the bimodule theorem
# ---------------------------------------------------------------------------

def check_left_twist_connection_compat(twist: AlgebraTwist, lmt: LeftModuleTwist,
                                       conn_e: ModuleConnection,
                                       caps: Caps) -> CheckResult:
    """Compatibility of the left module twist with the first connection."""
    m = lmt.rank
    E = caps.max_exponent
    cases = 0

    def nabla_terms(l: int, i: int) -> list[tuple[int, Form]]:
        x_pow = Form.gen_power("x", i)
        out = []
        for p in range(m):
            eta = conn_e.potential[p][l] * x_pow
            if p == l:
                eta = eta + x_pow.d()
            if not eta.is_zero:
                out.append((p, eta))
        return out

    for k in range(m):
        for j in range(E + 1):
            for i in range(E + 1):
                cases += 1
                lhs: dict[tuple[int, Word], Fraction] = {}
                for c, l in lmt.cross_word(j, k, i):
                    for p, eta in nabla_terms(l, i):
                        for w, cw in eta.terms.items():
                            key = (p, w)
                            lhs[key] = lhs.get(key, Fraction(0)) + c * cw
                rhs: dict[tuple[int, Word], Fraction] = {}
                for p, eta in nabla_terms(k, i):
                    for w, cw in eta.terms.items():
                        scale = twist.qpow(j * word_letters(w))
                        for c, l in lmt.cross_word(j, p, 0):
                            key = (l, w)
                            rhs[key] = rhs.get(key, Fraction(0)) + c * cw * scale
                lhs = {key: v for key, v in lhs.items() if v}
                rhs = {key: v for key, v in rhs.items() if v}
                if lhs != rhs:
                    return failed(
                        "e-connection-compat",
                        f"y^{j} ⊗ e_{k + 1} x^{i}: twist and connection "
                        f"do not commute", cases)
    return passed("e-connection-compat", cases)


def _one_form_words_x(caps: Caps) -> list[Word]:
    E = caps.max_exponent
    return [(a, b) for a in range(E + 1) for b in range(E + 1)]


def check_swap_compat_e(ps: ProductSwap, caps: Caps) -> CheckResult:
    """Compatibility equation for the x-form/e-block swap piece.

    Verifies the displayed exchange identity between the e-factor swap, the
    left module twist and the lifted algebra twist; independently verifies
    the left and right module-morphism property of the piece; and checks
    that the equation verdict and the left-morphism verdict agree.
    """
    twist, lmt, swap_e = ps.twist, ps.lmt, ps.swap_e
    m = ps.m
    E = caps.max_exponent
    eq_cases = 0
    eq_witness = None
    for j in range(E + 1):
        for w in _one_form_words_x(caps):
            omega = Form.word("x", w)
            lam = word_letters(w)
            for k in range(m):
                eq_cases += 1
                basis = [Form.unit("x") if l == k else Form.zero("x")
                         for l in range(m)]
                lhs: dict[tuple[int, Word], Fraction] = {}
                row = lmt.matrix_power(j)[k]
                for l in range(m):
                    if not row[l]:
                        continue
                    vec = [Form.unit("x") if p == l else Form.zero("x")
                           for p in range(m)]
                    for p, res in enumerate(swap_e.apply(omega, vec)):
                        for wres, cres in res.terms.items():
                            key = (p, wres)
                            lhs[key] = lhs.get(key, Fraction(0)) + \
                                twist.qpow(j * lam) * row[l] * cres
                rhs: dict[tuple[int, Word], Fraction] = {}
                for p, res in enumerate(swap_e.apply(omega, basis)):
                    for wres, cres in res.terms.items():
                        scale = twist.qpow(j * word_letters(wres))
                        rowp = lmt.matrix_power(j)[p]
                        for l in range(m):
                            if rowp[l]:
                                key = (l, wres)
                                rhs[key] = rhs.get(key, Fraction(0)) + \
                                    rowp[l] * scale * cres
                lhs = {key: v for key, v in lhs.items() if v}
                rhs = {key: v for key, v in rhs.items() if v}
                if lhs != rhs and eq_witness is None:
                    eq_witness = (f"y^{j} ⊗ {render_word('x', w)} ⊗ "
                                  f"e_{k + 1}")

    left_witness, right_witness, mor_cases = _piece_morphism(
        ps, caps, block="e", form_side="x")

    agree = (eq_witness is None) == (left_witness is None)
    detail = {
        "equation": "pass" if eq_witness is None else "fail",
        "left_morphism": "pass" if left_witness is None else "fail",
        "right_morphism": "pass" if right_witness is None else "fail",
        "equivalence_agrees": agree,
    }
    name = "swap-compat-e"
    cases = eq_cases + mor_cases
    if not agree:
        return failed(name, "equation and left-morphism verdicts disagree: "
                      f"{eq_witness or left_witness}", cases, **detail)
    if eq_witness or right_witness:
        return failed(name, eq_witness or right_witness, cases, **detail)
    return passed(name, cases, **detail)


def check_swap_compat_f(ps: ProductSwap, caps: Caps) -> CheckResult:
    """Mirror of :func:`check_swap_compat_e` for the y-form/f-block piece."""
    twist, rmt, swap_f = ps.twist, ps.rmt, ps.swap_f
    n = ps.n
    E = caps.max_exponent
    eq_cases = 0
    eq_witness = None
    for i in range(E + 1):
        for w in _one_form_words_x(caps):
            eta = Form.word("y", w)
            lam = word_letters(w)
            for k in range(n):
                eq_cases += 1
                lhs: dict[tuple[int, Word], Fraction] = {}
                row = rmt.matrix_power(i)[k]
                for l in range(n):
                    if not row[l]:
                        continue
                    vec = [Form.unit("y") if p == l else Form.zero("y")
                           for p in range(n)]
                    for p, res in enumerate(swap_f.apply(eta, vec)):
                        for wres, cres in res.terms.items():
                            key = (p, wres)
                            lhs[key] = lhs.get(key, Fraction(0)) + \
                                twist.qpow(i * lam) * row[l] * cres
                basis = [Form.unit("y") if l == k else Form.zero("y")
                         for l in range(n)]
                rhs: dict[tuple[int, Word], Fraction] = {}
                for p, res in enumerate(swap_f.apply(eta, basis)):
                    for wres, cres in res.terms.items():
                        scale = twist.qpow(i * word_letters(wres))
                        rowp = rmt.matrix_power(i)[p]
                        for l in range(n):
                            if rowp[l]:
                                key = (l, wres)
                                rhs[key] = rhs.get(key, Fraction(0)) + \
                                    rowp[l] * scale * cres
                lhs = {key: v for key, v in lhs.items() if v}
                rhs = {key: v for key, v in rhs.items() if v}
                if lhs != rhs and eq_witness is None:
                    eq_witness = (f"{render_word('y', w)} ⊗ f_{k + 1} "
                                  f"⊗ x^{i}")

    left_witness, right_witness, mor_cases = _piece_morphism(
        ps, caps, block="f", form_side="y")

    agree = (eq_witness is None) == (right_witness is None)
    detail = {
        "equation": "pass" if eq_witness is None else "fail",
        "left_morphism": "pass" if left_witness is None else "fail",
        "right_morphism": "pass" if right_witness is None else "fail",
        "equivalence_agrees": agree,
    }
    name = "swap-compat-f"
    cases = eq_cases + mor_cases
    if not agree:
        return failed(name, "equation and right-morphism verdicts disagree: "
                      f"{eq_witness or right_witness}", cases, **detail)
    if eq_witness or left_witness:
        return failed(name, eq_witness or left_witness, cases, **detail)
    return passed(name, cases, **detail)


def _piece_morphism(ps: ProductSwap, caps: Caps, block: str,
                    form_side: str) -> tuple[str | None, str | None, int]:
    """Left/right module-morphism witnesses for one swap piece."""
    twist, rmt, lmt = ps.twist, ps.rmt, ps.lmt
    m, n = ps.m, ps.n
    E = caps.max_exponent
    monos = [ProductForm.pair(wx, wy) for wx, wy in enumerate_monomials(E)]

    one_forms = []
    for w in _one_form_words_x(caps):
        for t in range(E + 1):
            if form_side == "x":
                one_forms.append((f"{render_word('x', w)} ⊗ y^{t}",
                                  ProductForm({(w, (t,)): Fraction(1)})))
            else:
                one_forms.append((f"x^{t} ⊗ {render_word('y', w)}",
                                  ProductForm({((t,), w): Fraction(1)})))

    basis: list[tuple[str, ProductVector]] = []
    for k in range(m if block == "e" else n):
        for i in range(E + 1):
            for j in range(E + 1):
                if block == "e":
                    pv = ProductVector.e_basis(m, n, k, ProductForm.monomial(i, j))
                    basis.append((f"e_{k + 1} x^{i} ⊗ y^{j}", pv))
                else:
                    naive = [ProductForm.zero()] * n
                    naive[k] = ProductForm.monomial(i, j)
                    pv = ProductVector([ProductForm.zero()] * m,
                                       f_naive_to_free(rmt, naive))
                    basis.append((f"x^{i} ⊗ f_{k + 1} y^{j}", pv))

    left_witness = right_witness = None
    cases = 0
    for flabel, oneform in one_forms:
        for plabel, pv in basis:
            base = ps.apply(oneform, pv)
            for w in monos:
                cases += 2
                if left_witness is None:
                    lhs = ps.apply(twist.mul(w, oneform), pv)
                    rhs = act_left(twist, rmt, lmt, w, base)
                    if lhs != rhs:
                        left_witness = (f"left: {w} . ({flabel}) ⊗ {plabel}")
                if right_witness is None:
                    lhs = ps.apply(oneform, act_right(twist, pv, w))
                    rhs = act_right_form(twist, base, w)
                    if lhs != rhs:
                        right_witness = (f"right: ({flabel}) ⊗ {plabel} . {w}")
            if left_witness and right_witness:
                break
        if left_witness and right_witness:
            break
    return left_witness, right_witness, cases


def check_swap_cross_morphisms(ps: ProductSwap, caps: Caps) -> CheckResult:
    """Module-morphism properties of the two mixed swap pieces."""
    lw1, rw1, c1 = _piece_morphism(ps, caps, block="e", form_side="y")
    lw2, rw2, c2 = _piece_morphism(ps, caps, block="f", form_side="x")
    cases = c1 + c2
    detail = {
        "yform_eblock_left": "pass" if lw1 is None else "fail",
        "yform_eblock_right": "pass" if rw1 is None else "fail",
        "xform_fblock_left": "pass" if lw2 is None else "fail",
        "xform_fblock_right": "pass" if rw2 is None else "fail",
    }
    name = "swap-cross-morphisms"
    witness = lw1 or rw1 or lw2 or rw2
    if witness:
        return failed(name, witness, cases, **detail)
    return passed(name, cases, **detail)


def check_bimodule_leibniz(pc: ProductConnection, ps: ProductSwap,
                           caps: Caps) -> CheckResult:
    """Left Leibniz identity of the product connection via the swap."""
    twist, rmt, lmt = ps.twist, ps.rmt, ps.lmt
    E = caps.max_exponent
    monos = [ProductForm.pair(wx, wy) for wx, wy in enumerate_monomials(E)]
    cases = 0
    for label, pv in iter_naive_basis(pc, caps):
        for w in monos:
            cases += 1
            lhs = pc.nabla(act_left(twist, rmt, lmt, w, pv))
            rhs = act_left(twist, rmt, lmt, w, pc.nabla(pv)) + \
                ps.apply(w.d(), pv)
            if lhs != rhs:
                return failed("bimodule-leibniz",
                              f"{w} . ({label})", cases)
    return passed("bimodule-leibniz", cases)


def check_bimodule_theorem(pc: ProductConnection, ps: ProductSwap, caps: Caps,
                           prerequisites: list[CheckResult]) -> CheckResult:
    """The bimodule theorem, gated on its hypotheses.

    If any prerequisite failed the theorem is reported inadmissible (a
    hypothesis failure, not a counterexample); otherwise the left Leibniz
    identity is verified on bounded bases.
    """
    bad = [r.name for r in prerequisites if not r.passed]
    if bad:
        return inadmissible("bimodule-theorem",
                            f"hypotheses failed: {', '.join(sorted(bad))}")
    inner = check_bimodule_leibniz(pc, ps, caps)
    return CheckResult("bimodule-theorem", inner.verdict, inner.witness,
                       inner.cases, inner.detail)
