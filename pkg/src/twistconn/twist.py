"""The q-commutation twisting map, its lift to forms, and module twists.

The algebra twist interchanges the two polynomial factors by
y x = q x y; on universal forms the unique compatible lift acts on basis
words by

    (y-word) ⊗ (x-word)  ->  (-1)^{deg_x deg_y} q^{letters_x * letters_y}
                               (x-word) ⊗ (y-word),

where the letter count of a word is degree + sum of exponents.  This closed
form is what runs everywhere; the defining recursion (base case plus the
multiplicativity and differential-compatibility rules) is kept in the test
suite as an independent oracle.

Module twists carry the free-module factors across the algebra factors.
The right twist on the rank-n module over the y-algebra is parameterized by
one invertible rational matrix S via  f_k ⊗ x -> x ⊗ sum_l S[k][l] f_l,
giving the closed form

    f_k y^j ⊗ x^i  ->  q^{ij} sum_l (S^i)[k][l]  x^i ⊗ f_l y^j,

with inverse obtained by q -> 1/q, S -> S^{-1}.  The left twist on the
rank-m module over the x-algebra mirrors this with the matrix power driven
by the y-exponent.

Checkers verify the defining axioms exhaustively on bounded bases and
accept pluggable maps with the same call signature, so deliberately
corrupted maps can be exercised.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .forms import (Caps, Form, Word, UNIT_WORD, iter_word_tuples, render_word,
                    word_degree, word_differential, word_letters, word_mul,
                    words_by_degree)
from .rationals import Matrix, MatrixPowers, identity
from .reports import CheckResult, failed, passed
from .tdga import PairWord, ProductForm

CrossFn = Callable[[Form, Form], ProductForm]
ModuleTwistFn = Callable[[int, int, int], list[tuple[Fraction, int]]]


class AlgebraTwist:
    """The q-deformation twisting map together with its lift and inverse."""

    def __init__(self, q):
        self.q = Fraction(q)
        if not self.q:
            raise ValueError("q must be nonzero")
        self._powers: dict[int, Fraction] = {0: Fraction(1)}

    def qpow(self, e: int) -> Fraction:
        cache = self._powers
        if e not in cache:
            cache[e] = self.q ** e
        return cache[e]

    # ---- closed forms on words ----------------------------------------
    def cross_coeff(self, wy: Word, wx: Word) -> Fraction:
        c = self.qpow(word_letters(wx) * word_letters(wy))
        if (word_degree(wx) * word_degree(wy)) % 2:
            c = -c
        return c

    def uncross_coeff(self, wx: Word, wy: Word) -> Fraction:
        c = self.qpow(-word_letters(wx) * word_letters(wy))
        if (word_degree(wx) * word_degree(wy)) % 2:
            c = -c
        return c

    # ---- element level -------------------------------------------------
    def cross(self, yform: Form, xform: Form) -> ProductForm:
        """Lifted twisting map: y-forms move right, x-forms move left."""
        if yform.gen != "y" or xform.gen != "x":
            raise ValueError("cross expects (y-form, x-form)")
        out: dict[PairWord, Fraction] = {}
        for wy, cy in yform.terms.items():
            for wx, cx in xform.terms.items():
                c = cy * cx * self.cross_coeff(wy, wx)
                key = (wx, wy)
                out[key] = out.get(key, Fraction(0)) + c
        return ProductForm(out)

    def uncross(self, xform: Form, yform: Form) -> dict[tuple[Word, Word], Fraction]:
        """Inverse crossing; keys are (y-word, x-word) pairs."""
        if yform.gen != "y" or xform.gen != "x":
            raise ValueError("uncross expects (x-form, y-form)")
        out: dict[tuple[Word, Word], Fraction] = {}
        for wx, cx in xform.terms.items():
            for wy, cy in yform.terms.items():
                c = cy * cx * self.uncross_coeff(wx, wy)
                key = (wy, wx)
                if c:
                    out[key] = out.get(key, Fraction(0)) + c
        return {k: v for k, v in out.items() if v}

    def mul(self, u: ProductForm, v: ProductForm) -> ProductForm:
        """Twisted product (u_x ⊗ u_y)(v_x ⊗ v_y) via the lift."""
        terms: dict[PairWord, Fraction] = {}
        for (ux, uy), cu in u.terms.items():
            duy = word_degree(uy)
            luy = word_letters(uy)
            for (vx, vy), cv in v.terms.items():
                c = cu * cv * self.qpow(word_letters(vx) * luy)
                if (word_degree(vx) * duy) % 2:
                    c = -c
                key = (word_mul(ux, vx), word_mul(uy, vy))
                c2 = terms.get(key, Fraction(0)) + c
                if c2:
                    terms[key] = c2
                elif key in terms:
                    del terms[key]
        return ProductForm(terms)

    def mul_many(self, *factors: ProductForm) -> ProductForm:
        out = ProductForm.unit()
        for f in factors:
            out = self.mul(out, f)
        return out


class RightModuleTwist:
    """Carries the free y-module factor across the x-algebra.

    ``matrix`` is the invertible mixing matrix S; rank n is its size.
    """

    def __init__(self, twist: AlgebraTwist, matrix: Matrix | Sequence[Sequence] | None = None,
                 rank: int | None = None):
        self.twist = twist
        if matrix is None:
            if rank is None:
                raise ValueError("need a matrix or a rank")
            matrix = identity(rank)
        self._powers = MatrixPowers(matrix)

    @property
    def rank(self) -> int:
        return self._powers.size

    @property
    def matrix(self) -> Matrix:
        return self._powers.mat

    def matrix_power(self, k: int) -> Matrix:
        return self._powers.power(k)

    def cross_word(self, k: int, j: int, i: int) -> list[tuple[Fraction, int]]:
        """f_k y^j ⊗ x^i  ->  sum of (coeff, l) with x^i ⊗ f_l y^j."""
        q = self.twist.qpow(i * j)
        row = self.matrix_power(i)[k]
        return [(q * row[l], l) for l in range(self.rank) if row[l]]

    def uncross_word(self, i: int, k: int, j: int) -> list[tuple[Fraction, int]]:
        """x^i ⊗ f_k y^j  ->  sum of (coeff, l) with f_l y^j ⊗ x^i."""
        q = self.twist.qpow(-i * j)
        row = self.matrix_power(-i)[k]
        return [(q * row[l], l) for l in range(self.rank) if row[l]]


class LeftModuleTwist:
    """Carries the free x-module factor across the y-algebra (mirror)."""

    def __init__(self, twist: AlgebraTwist, matrix: Matrix | Sequence[Sequence] | None = None,
                 rank: int | None = None):
        self.twist = twist
        if matrix is None:
            if rank is None:
                raise ValueError("need a matrix or a rank")
            matrix = identity(rank)
        self._powers = MatrixPowers(matrix)

    @property
    def rank(self) -> int:
        return self._powers.size

    @property
    def matrix(self) -> Matrix:
        return self._powers.mat

    def matrix_power(self, k: int) -> Matrix:
        return self._powers.power(k)

    def cross_word(self, j: int, k: int, i: int) -> list[tuple[Fraction, int]]:
        """y^j ⊗ e_k x^i  ->  sum of (coeff, l) with e_l x^i ⊗ y^j."""
        q = self.twist.qpow(i * j)
        row = self.matrix_power(j)[k]
        return [(q * row[l], l) for l in range(self.rank) if row[l]]

    def uncross_word(self, k: int, i: int, j: int) -> list[tuple[Fraction, int]]:
        """e_k x^i ⊗ y^j  ->  sum of (coeff, l) with y^j ⊗ e_l x^i."""
        q = self.twist.qpow(-i * j)
        row = self.matrix_power(-j)[k]
        return [(q * row[l], l) for l in range(self.rank) if row[l]]


# ---------------------------------------------------------------------------
# axiom checkers
# ---------------------------------------------------------------------------

def _default_cross(twist: AlgebraTwist) -> CrossFn:
    return twist.cross


def _wform(gen: str, w: Word) -> Form:
    return Form.word(gen, w)


def check_twist_axioms(twist: AlgebraTwist, caps: Caps,
                       cross: CrossFn | None = None) -> CheckResult:
    """Unit and multiplicativity axioms of the (lifted) twisting map.

    Units are checked on every word within per-word caps; the two
    multiplicativity conditions are checked on all word triples whose total
    degree stays within caps.max_degree.  For the built-in closed form the
    triple loop compares single scaled word pairs directly (the closed form
    maps words to words); a pluggable map goes through full elements.
    """
    fn = cross or _default_cross(twist)
    cases = 0
    failures: dict[str, str] = {}

    words = [w for ws in words_by_degree(caps.max_degree, caps.max_exponent).values()
             for w in ws]
    unit_x = Form.unit("x")
    unit_y = Form.unit("y")
    for w in words:
        cases += 2
        if "unit" in failures:
            break
        got = fn(unit_y, _wform("x", w))
        if got != ProductForm({(w, UNIT_WORD): Fraction(1)}):
            failures["unit"] = f"1 ⊗ {render_word('x', w)} -> {got}"
            continue
        got = fn(_wform("y", w), unit_x)
        if got != ProductForm({(UNIT_WORD, w): Fraction(1)}):
            failures["unit"] = f"{render_word('y', w)} ⊗ 1 -> {got}"

    if cross is None:
        # the merged word's letters and degree must reproduce the two-step
        # crossing exactly
        qpow = twist.qpow
        for wb, wa, wa2 in iter_word_tuples(3, caps):
            cases += 2
            merged = word_mul(wa, wa2)
            lb, db = word_letters(wb), word_degree(wb)
            lhs = qpow(word_letters(merged) * lb)
            if (word_degree(merged) * db) % 2:
                lhs = -lhs
            rhs = qpow(word_letters(wa) * lb) * qpow(word_letters(wa2) * lb)
            if ((word_degree(wa) + word_degree(wa2)) * db) % 2:
                rhs = -rhs
            if lhs != rhs:
                failures.setdefault(
                    "product-right",
                    f"b={render_word('y', wb)}, a={render_word('x', wa)}, "
                    f"a'={render_word('x', wa2)}")
                break
            # mirror roles: wb, wa as the two y-words, wa2 as the x-word
            merged_y = word_mul(wb, wa)
            la2, da2 = word_letters(wa2), word_degree(wa2)
            lhs = qpow(la2 * word_letters(merged_y))
            if (da2 * word_degree(merged_y)) % 2:
                lhs = -lhs
            rhs = qpow(la2 * word_letters(wb)) * qpow(la2 * word_letters(wa))
            if (da2 * (word_degree(wb) + word_degree(wa))) % 2:
                rhs = -rhs
            if lhs != rhs:
                failures.setdefault(
                    "product-left",
                    f"b={render_word('y', wb)}, b'={render_word('y', wa)}, "
                    f"a={render_word('x', wa2)}")
                break
    else:
        def compose_right(wb: Word, wa: Word, wa2: Word) -> ProductForm:
            # (mu_A ⊗ B) o (A ⊗ R) o (R ⊗ A)
            out: dict[PairWord, Fraction] = {}
            for (ax, by), c in fn(_wform("y", wb), _wform("x", wa)).terms.items():
                for (ax2, by2), c2 in fn(_wform("y", by),
                                         _wform("x", wa2)).terms.items():
                    key = (word_mul(ax, ax2), by2)
                    out[key] = out.get(key, Fraction(0)) + c * c2
            return ProductForm(out)

        def compose_left(wb: Word, wb2: Word, wa: Word) -> ProductForm:
            # (A ⊗ mu_B) o (R ⊗ B) o (B ⊗ R)
            out: dict[PairWord, Fraction] = {}
            for (ax, by2), c in fn(_wform("y", wb2), _wform("x", wa)).terms.items():
                for (ax2, by), c2 in fn(_wform("y", wb),
                                        _wform("x", ax)).terms.items():
                    key = (ax2, word_mul(by, by2))
                    out[key] = out.get(key, Fraction(0)) + c * c2
            return ProductForm(out)

        for wb, wa, wa2 in iter_word_tuples(3, caps):
            cases += 1
            lhs = fn(_wform("y", wb), _wform("x", word_mul(wa, wa2)))
            if lhs != compose_right(wb, wa, wa2):
                failures.setdefault(
                    "product-right",
                    f"b={render_word('y', wb)}, a={render_word('x', wa)}, "
                    f"a'={render_word('x', wa2)}")
                break
        for wb, wb2, wa in iter_word_tuples(3, caps):
            cases += 1
            lhs = fn(_wform("y", word_mul(wb, wb2)), _wform("x", wa))
            if lhs != compose_left(wb, wb2, wa):
                failures.setdefault(
                    "product-left",
                    f"b={render_word('y', wb)}, b'={render_word('y', wb2)}, "
                    f"a={render_word('x', wa)}")
                break

    name = "twist-axioms"
    if failures:
        axiom, witness = next(iter(failures.items()))
        return failed(name, f"{axiom}: {witness}", cases,
                      failed_axioms=sorted(failures))
    return passed(name, cases)


def check_lift_compat(twist: AlgebraTwist, caps: Caps,
                      cross: CrossFn | None = None) -> CheckResult:
    """Differential compatibility of the lift on bounded word pairs."""
    fn = cross or _default_cross(twist)
    cases = 0
    witness = None

    def d_form(gen: str, w: Word) -> Form:
        return Form(gen, {nw: Fraction(s) for nw, s in word_differential(w).items()})

    def apply_dB(p: ProductForm) -> ProductForm:
        out: dict[PairWord, Fraction] = {}
        for (ax, by), c in p.terms.items():
            sign = -1 if word_degree(ax) % 2 else 1
            for nby, s in word_differential(by).items():
                key = (ax, nby)
                out[key] = out.get(key, Fraction(0)) + sign * s * c
        return ProductForm(out)

    def apply_dA(p: ProductForm) -> ProductForm:
        out: dict[PairWord, Fraction] = {}
        for (ax, by), c in p.terms.items():
            sign = -1 if word_degree(by) % 2 else 1
            for nax, s in word_differential(ax).items():
                key = (nax, by)
                out[key] = out.get(key, Fraction(0)) + sign * s * c
        return ProductForm(out)

    for wb, wa in iter_word_tuples(2, caps):
        cases += 2
        base = fn(_wform("y", wb), _wform("x", wa))
        lhs = fn(d_form("y", wb), _wform("x", wa))
        rhs = apply_dB(base)
        if lhs != rhs:
            witness = (f"d on y-side at ({render_word('y', wb)}, "
                       f"{render_word('x', wa)}): {lhs} != {rhs}")
            break
        lhs = fn(_wform("y", wb), d_form("x", wa))
        rhs = apply_dA(base)
        if lhs != rhs:
            witness = (f"d on x-side at ({render_word('y', wb)}, "
                       f"{render_word('x', wa)}): {lhs} != {rhs}")
            break

    name = "lift-compat"
    if witness:
        return failed(name, witness, cases)
    return passed(name, cases)


def check_right_module_twist(rmt: RightModuleTwist, caps: Caps,
                             twist_map: ModuleTwistFn | None = None) -> CheckResult:
    """Unitality and the two right module twisting conditions."""
    fn = twist_map or rmt.cross_word
    twist = rmt.twist
    n = rmt.rank
    E = caps.max_exponent
    cases = 0
    witness = None

    def as_vec(terms: list[tuple[Fraction, int]]) -> list[Fraction]:
        vec = [Fraction(0)] * n
        for c, l in terms:
            vec[l] += c
        return vec

    for k in range(n):
        cases += 1
        if as_vec(fn(k, 0, 0)) != as_vec([(Fraction(1), k)]):
            witness = f"unit: f_{k + 1} ⊗ 1 not fixed"
            break

    if witness is None:
        for k in range(n):
            for j in range(E + 1):
                for i in range(E + 1):
                    for i2 in range(E + 1):
                        cases += 1
                        lhs = as_vec(fn(k, j, i + i2))
                        rhs = [Fraction(0)] * n
                        for c, l in fn(k, j, i):
                            for c2, m in fn(l, j, i2):
                                rhs[m] += c * c2
                        if lhs != rhs:
                            witness = (f"multiplicativity at f_{k + 1} y^{j} "
                                       f"⊗ x^{i} * x^{i2}")
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break

    if witness is None:
        for k in range(n):
            for j in range(E + 1):
                for j2 in range(E + 1):
                    for i in range(E + 1):
                        cases += 1
                        lhs = as_vec(fn(k, j + j2, i))
                        scale = twist.qpow(i * j2)  # crossing y^{j2} past x^i
                        rhs = [scale * c for c in as_vec(fn(k, j, i))]
                        if lhs != rhs:
                            witness = (f"module action at f_{k + 1} y^{j} * "
                                       f"y^{j2} ⊗ x^{i}")
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break

    name = "right-module-twist"
    if witness:
        return failed(name, witness, cases)
    return passed(name, cases)


def check_left_module_twist(lmt: LeftModuleTwist, caps: Caps,
                            twist_map: ModuleTwistFn | None = None) -> CheckResult:
    """Mirror checks for the left module twisting map."""
    fn = twist_map or lmt.cross_word
    twist = lmt.twist
    m = lmt.rank
    E = caps.max_exponent
    cases = 0
    witness = None

    def as_vec(terms: list[tuple[Fraction, int]]) -> list[Fraction]:
        vec = [Fraction(0)] * m
        for c, l in terms:
            vec[l] += c
        return vec

    for k in range(m):
        cases += 1
        if as_vec(fn(0, k, 0)) != as_vec([(Fraction(1), k)]):
            witness = f"unit: 1 ⊗ e_{k + 1} not fixed"
            break

    if witness is None:
        # multiplicativity in the y-algebra argument
        for k in range(m):
            for i in range(E + 1):
                for j in range(E + 1):
                    for j2 in range(E + 1):
                        cases += 1
                        lhs = as_vec(fn(j + j2, k, i))
                        rhs = [Fraction(0)] * m
                        for c, l in fn(j2, k, i):
                            for c2, p in fn(j, l, i):
                                rhs[p] += c * c2
                        if lhs != rhs:
                            witness = (f"multiplicativity at y^{j} * y^{j2} "
                                       f"⊗ e_{k + 1} x^{i}")
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break

    if witness is None:
        # compatibility with the left x-action through the algebra twist
        for k in range(m):
            for j in range(E + 1):
                for i in range(E + 1):
                    for i2 in range(E + 1):
                        cases += 1
                        lhs = as_vec(fn(j, k, i + i2))
                        scale = twist.qpow(i * j)
                        rhs = [scale * c for c in as_vec(fn(j, k, i2))]
                        if lhs != rhs:
                            witness = (f"left action at y^{j} ⊗ x^{i} "
                                       f"e_{k + 1} x^{i2}")
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break

    name = "left-module-twist"
    if witness:
        return failed(name, witness, cases)
    return passed(name, cases)


def check_dga_laws(twist: AlgebraTwist, caps: Caps,
                   letter_budget: int = 8) -> CheckResult:
    """Graded-algebra laws of the product calculus on bounded word bases.

    Verifies, at word level: the unit law and d^2 = 0 on every pair-word
    within per-word caps; the graded Leibniz rule on pair-words of bounded
    total degree; associativity on triples of bounded total degree and
    total letter count; and the degree-0 commutation relation
    (x^a ⊗ y^b)(x^c ⊗ y^d) = q^{bc} x^{a+c} ⊗ y^{b+d} exhaustively.
    """
    qpow = twist.qpow
    by_deg = words_by_degree(caps.max_degree, caps.max_exponent)
    pair_words: list[tuple[int, int, Word, Word]] = []
    for dx in range(caps.max_degree + 1):
        for dy in range(caps.max_degree + 1 - dx):
            for wx in by_deg[dx]:
                lx = word_letters(wx)
                for wy in by_deg[dy]:
                    pair_words.append((dx + dy, lx + word_letters(wy), wx, wy))
    # sorted by letter count so the triple loop can cut on the budget
    pair_words.sort(key=lambda t: (t[1], t[0], t[2], t[3]))
    cases = 0

    def mul_word(wx1: Word, wy1: Word, wx2: Word, wy2: Word):
        c = qpow(word_letters(wx2) * word_letters(wy1))
        if (word_degree(wx2) * word_degree(wy1)) % 2:
            c = -c
        return c, word_mul(wx1, wx2), word_mul(wy1, wy2)

    def d_word(wx: Word, wy: Word) -> dict[tuple[Word, Word], int]:
        out: dict[tuple[Word, Word], int] = {}
        for nwx, s in word_differential(wx).items():
            out[(nwx, wy)] = out.get((nwx, wy), 0) + s
        sx = -1 if word_degree(wx) % 2 else 1
        for nwy, s in word_differential(wy).items():
            out[(wx, nwy)] = out.get((wx, nwy), 0) + sx * s
        return {k: v for k, v in out.items() if v}

    d_cache: dict[tuple[Word, Word], dict[tuple[Word, Word], int]] = {}

    def d_cached(wx: Word, wy: Word) -> dict[tuple[Word, Word], int]:
        key = (wx, wy)
        if key not in d_cache:
            d_cache[key] = d_word(wx, wy)
        return d_cache[key]

    # unit law and d^2 = 0 on every pair word
    for _, _, wx, wy in pair_words:
        cases += 2
        c, mx, my = mul_word(UNIT_WORD, UNIT_WORD, wx, wy)
        c2, mx2, my2 = mul_word(wx, wy, UNIT_WORD, UNIT_WORD)
        if (c, mx, my) != (Fraction(1), wx, wy) or \
                (c2, mx2, my2) != (Fraction(1), wx, wy):
            return failed("dga-laws", f"unit law at ({render_word('x', wx)}, "
                          f"{render_word('y', wy)})", cases)
        acc: dict[tuple[Word, Word], int] = {}
        for (nwx, nwy), s in d_cached(wx, wy).items():
            for key, s2 in d_word(nwx, nwy).items():
                acc[key] = acc.get(key, 0) + s * s2
        if any(acc.values()):
            return failed("dga-laws", f"d^2 != 0 at ({render_word('x', wx)}, "
                          f"{render_word('y', wy)})", cases)

    # graded Leibniz on pairs of bounded total degree
    for d1, l1, ux, uy in pair_words:
        if l1 > letter_budget:
            break
        du = d_cached(ux, uy)
        sign = -1 if d1 % 2 else 1
        for d2, l2, vx, vy in pair_words:
            if l1 + l2 > letter_budget:
                break
            if d1 + d2 > caps.max_degree:
                continue
            cases += 1
            cuv, px, py = mul_word(ux, uy, vx, vy)
            lhs: dict[tuple[Word, Word], Fraction] = {
                key: cuv * s for key, s in d_word(px, py).items()}
            rhs: dict[tuple[Word, Word], Fraction] = {}
            for (nux, nuy), s in du.items():
                c, mx, my = mul_word(nux, nuy, vx, vy)
                key = (mx, my)
                rhs[key] = rhs.get(key, Fraction(0)) + s * c
            for (nvx, nvy), s in d_cached(vx, vy).items():
                c, mx, my = mul_word(ux, uy, nvx, nvy)
                key = (mx, my)
                rhs[key] = rhs.get(key, Fraction(0)) + sign * s * c
            rhs = {k: v for k, v in rhs.items() if v}
            lhs = {k: v for k, v in lhs.items() if v}
            if lhs != rhs:
                return failed("dga-laws",
                              f"graded Leibniz at ({render_word('x', ux)}, "
                              f"{render_word('y', uy)}) * "
                              f"({render_word('x', vx)}, {render_word('y', vy)})",
                              cases)

    # associativity on bounded triples; integer exponent/sign bookkeeping
    # for both association orders, with the merged words built both ways
    rich = [(dsum, lsum, wx, wy, word_letters(wx), word_letters(wy),
             word_degree(wx), word_degree(wy))
            for dsum, lsum, wx, wy in pair_words]
    max_deg = caps.max_degree
    for d1, l1, ux, uy, lux, luy, dux, duy in rich:
        if l1 > letter_budget:
            break
        for d2, l2, vx, vy, lvx, lvy, dvx, dvy in rich:
            if l1 + l2 > letter_budget:
                break
            if d1 + d2 > max_deg:
                continue
            uvx = word_mul(ux, vx)
            uvy = word_mul(uy, vy)
            for d3, l3, wx, wy, lwx, lwy, dwx, dwy in rich:
                if l1 + l2 + l3 > letter_budget:
                    break
                if d1 + d2 + d3 > max_deg:
                    continue
                cases += 1
                exp_left = lvx * luy + lwx * (luy + lvy)
                exp_right = lwx * lvy + (lvx + lwx) * luy
                sign_left = (dvx * duy + dwx * (duy + dvy)) % 2
                sign_right = (dwx * dvy + (dvx + dwx) * duy) % 2
                if exp_left != exp_right or sign_left != sign_right:
                    if qpow(exp_left) * (-1) ** sign_left != \
                            qpow(exp_right) * (-1) ** sign_right:
                        return failed(
                            "dga-laws",
                            f"associativity at ({render_word('x', ux)}, "
                            f"{render_word('y', uy)}), ({render_word('x', vx)}, "
                            f"{render_word('y', vy)}), ({render_word('x', wx)}, "
                            f"{render_word('y', wy)})", cases)
                if word_mul(uvx, wx) != word_mul(ux, word_mul(vx, wx)) or \
                        word_mul(uvy, wy) != word_mul(uy, word_mul(vy, wy)):
                    return failed(
                        "dga-laws",
                        f"word concatenation not associative at "
                        f"({render_word('x', ux)}, {render_word('y', uy)}), "
                        f"({render_word('x', vx)}, {render_word('y', vy)}), "
                        f"({render_word('x', wx)}, {render_word('y', wy)})",
                        cases)

    # degree-0 commutation relation, exhaustively at the exponent cap
    E = caps.max_exponent
    for a in range(E + 1):
        for b in range(E + 1):
            for c in range(E + 1):
                for d in range(E + 1):
                    cases += 1
                    got, mx, my = mul_word((a,), (b,), (c,), (d,))
                    if (got, mx, my) != (qpow(b * c), (a + c,), (b + d,)):
                        return failed("dga-laws",
                                      f"commutation at x^{a} y^{b} * x^{c} y^{d}",
                                      cases)
    return passed("dga-laws", cases)


def check_derived_conditions(rmt: RightModuleTwist, caps: Caps) -> CheckResult:
    """Exchange identities between the module twist and its inverse.

    Four consequences of the module twisting axioms plus invertibility:
    how the inverse interacts with multiplication on the polynomial side,
    with the left y-action, and with the algebra twist.  All are verified
    directly on monomial triples within caps.
    """
    twist = rmt.twist
    n = rmt.rank
    E = caps.max_exponent
    cases = 0
    conditions: dict[str, str] = {}

    def cross_vec(k: int, j: int, i: int) -> list[Fraction]:
        vec = [Fraction(0)] * n
        for c, l in rmt.cross_word(k, j, i):
            vec[l] += c
        return vec

    def uncross_vec(i: int, k: int, j: int) -> list[Fraction]:
        vec = [Fraction(0)] * n
        for c, l in rmt.uncross_word(i, k, j):
            vec[l] += c
        return vec

    for k in range(n):
        for j in range(E + 1):
            for i in range(E + 1):
                for e in range(E + 1):
                    cases += 4
                    # left x-multiplication absorbed by uncross-then-cross
                    lhs = cross_vec(k, j, e)
                    rhs = [Fraction(0)] * n
                    for c, l in rmt.uncross_word(i, k, j):
                        for c2, p in rmt.cross_word(l, j, i + e):
                            rhs[p] += c * c2
                    if lhs != rhs and "mul-exchange" not in conditions:
                        conditions["mul-exchange"] = (
                            f"x^{i} ⊗ f_{k + 1} y^{j} ⊗ x^{e}")
                    # uncrossing after the right y-action reduces to the
                    # inverse algebra-twist scale
                    lhs2 = [Fraction(0)] * n
                    for c, l in rmt.cross_word(k, j, i):
                        for c2, p in rmt.uncross_word(i, l, j + e):
                            lhs2[p] += c * c2
                    rhs2 = [Fraction(0)] * n
                    rhs2[k] = twist.qpow(-i * e)
                    if lhs2 != rhs2 and "y-action-exchange" not in conditions:
                        conditions["y-action-exchange"] = (
                            f"f_{k + 1} y^{j} ⊗ x^{i} ⊗ y^{e}")
                    # uncross of a product of x-powers splits in two steps
                    lhs3 = uncross_vec(i + e, k, j)
                    rhs3 = [Fraction(0)] * n
                    for c, l in rmt.uncross_word(e, k, j):
                        for c2, p in rmt.uncross_word(i, l, j):
                            rhs3[p] += c * c2
                    if lhs3 != rhs3 and "uncross-product" not in conditions:
                        conditions["uncross-product"] = (
                            f"x^{i} * x^{e} ⊗ f_{k + 1} y^{j}")
                    # the crossed left y-action commutes with uncrossing
                    lhs4 = [twist.qpow(i * e) * c for c in uncross_vec(i, k, j + e)]
                    rhs4 = uncross_vec(i, k, j)
                    if lhs4 != rhs4 and "crossed-y-action" not in conditions:
                        conditions["crossed-y-action"] = (
                            f"y^{e} ⊗ x^{i} ⊗ f_{k + 1} y^{j}")

    name = "derived-compat"
    if conditions:
        cond, witness = next(iter(conditions.items()))
        return failed(name, f"{cond} at {witness}", cases,
                      failed_conditions=sorted(conditions))
    return passed(name, cases)
