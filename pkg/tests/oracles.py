"""Independent reference implementations used as test oracles.

Everything here is built only from the defining recursions and the base
cases, never from the closed forms under test: the form-level crossing is
extended letter by letter via the unit, multiplicativity and differential
rules; the module twists are extended from their value on a single
generator; the classical product connection and the signs-only tensor
multiplication are written out directly.
"""

from __future__ import annotations

from fractions import Fraction

from twistconn.forms import Form, Word, word_differential, word_mul
from twistconn.tdga import ProductForm


def _first_letter(w: Word):
    """Split off the leftmost letter (generator or differential)."""
    if w[0] > 0:
        return (1,), (w[0] - 1,) + w[1:]
    if len(w) > 1:
        return (0, 0), w[1:]
    return None


def lift_oracle(q: Fraction, wy: Word, wx: Word,
                memo: dict | None = None) -> dict[tuple[Word, Word], Fraction]:
    """Recursive crossing of a y-word past an x-word.

    Base case: y ⊗ x -> q x ⊗ y.  Single letters extend through the two
    differential rules; longer words split off their leftmost letter and
    use the two multiplicativity rules.
    """
    if memo is None:
        memo = {}
    key = (wy, wx)
    if key in memo:
        return memo[key]
    letters = ((1,), (0, 0))
    if wx == (0,):
        res = {((0,), wy): Fraction(1)}
    elif wy == (0,):
        res = {(wx, (0,)): Fraction(1)}
    elif wy in letters and wx in letters:
        if wy == (1,) and wx == (1,):
            res = {((1,), (1,)): q}
        elif wy == (1,):                      # y past dx: differentiate x side
            res = {((0, 0), (1,)): q}
        elif wx == (1,):                      # dy past x: differentiate y side
            res = {((1,), (0, 0)): q}
        else:                                 # dy past dx: x side has degree 1
            res = {((0, 0), (0, 0)): -q}
    elif wx not in letters:
        u, v = _first_letter(wx)
        res = {}
        for (ax, by), c in lift_oracle(q, wy, u, memo).items():
            for (ax2, by2), c2 in lift_oracle(q, by, v, memo).items():
                k2 = (word_mul(ax, ax2), by2)
                res[k2] = res.get(k2, Fraction(0)) + c * c2
    else:
        u, v = _first_letter(wy)
        res = {}
        for (ax, by), c in lift_oracle(q, v, wx, memo).items():
            for (ax2, by2), c2 in lift_oracle(q, u, ax, memo).items():
                k2 = (ax2, word_mul(by2, by))
                res[k2] = res.get(k2, Fraction(0)) + c * c2
    res = {k2: v2 for k2, v2 in res.items() if v2}
    memo[key] = res
    return res


def _algebra_cross_coeff(q: Fraction, j: int, i: int,
                         memo: dict) -> Fraction:
    """Coefficient of y^j past x^i, through the recursive oracle."""
    table = lift_oracle(q, (j,), (i,), memo)
    assert list(table) == [((i,), (j,))]
    return table[((i,), (j,))]


def right_twist_oracle(q: Fraction, s_matrix, k: int, j: int, i: int,
                       memo: dict | None = None) -> list[Fraction]:
    """Coefficient vector of f_k y^j ⊗ x^i -> x^i ⊗ f_l y^j.

    Built from the base value on a single x-letter and the two defining
    module twisting rules.
    """
    if memo is None:
        memo = {}
    n = len(s_matrix)
    if i == 0:
        vec = [Fraction(0)] * n
        vec[k] = Fraction(1)
        return vec
    if j > 0:
        scale = _algebra_cross_coeff(q, j, i, memo)
        return [scale * c for c in right_twist_oracle(q, s_matrix, k, 0, i, memo)]
    if i == 1:
        return [Fraction(s_matrix[k][l]) for l in range(n)]
    inner = right_twist_oracle(q, s_matrix, k, 0, i - 1, memo)
    vec = [Fraction(0)] * n
    for l, c in enumerate(inner):
        if c:
            for p, c2 in enumerate(right_twist_oracle(q, s_matrix, l, 0, 1, memo)):
                vec[p] += c * c2
    return vec


def left_twist_oracle(q: Fraction, t_matrix, j: int, k: int, i: int,
                      memo: dict | None = None) -> list[Fraction]:
    """Coefficient vector of y^j ⊗ e_k x^i -> e_l x^i ⊗ y^j (mirror)."""
    if memo is None:
        memo = {}
    m = len(t_matrix)
    if j == 0:
        vec = [Fraction(0)] * m
        vec[k] = Fraction(1)
        return vec
    if i > 0:
        scale = _algebra_cross_coeff(q, j, i, memo)
        return [scale * c for c in left_twist_oracle(q, t_matrix, j, k, 0, memo)]
    if j == 1:
        return [Fraction(t_matrix[k][l]) for l in range(m)]
    inner = left_twist_oracle(q, t_matrix, j - 1, k, 0, memo)
    vec = [Fraction(0)] * m
    for l, c in enumerate(inner):
        if c:
            for p, c2 in enumerate(left_twist_oracle(q, t_matrix, 1, l, 0, memo)):
                vec[p] += c * c2
    return vec


def untwisted_mul(u: ProductForm, v: ProductForm) -> ProductForm:
    """Graded tensor-product multiplication with Koszul signs only."""
    terms = {}
    for (ux, uy), cu in u.terms.items():
        duy = len(uy) - 1
        for (vx, vy), cv in v.terms.items():
            c = cu * cv
            if ((len(vx) - 1) * duy) % 2:
                c = -c
            key = (word_mul(ux, vx), word_mul(uy, vy))
            terms[key] = terms.get(key, Fraction(0)) + c
    return ProductForm(terms)


def classical_product_nabla(potential_e, potential_f, e_coords,
                            f_coords) -> tuple[list[ProductForm], list[ProductForm]]:
    """The untwisted product connection on degree-0 coordinates.

    Componentwise differentials on both tensor legs plus the two gauge
    potentials, with scalars crossing freely (the flip).
    """
    m, n = len(potential_e), len(potential_f)

    def d_block(w: ProductForm) -> ProductForm:
        terms = {}
        for (wx, wy), c in w.terms.items():
            for nwx, s in word_differential(wx).items():
                key = (nwx, wy)
                terms[key] = terms.get(key, Fraction(0)) + s * c
            for nwy, s in word_differential(wy).items():
                key = (wx, nwy)
                terms[key] = terms.get(key, Fraction(0)) + s * c
        return ProductForm(terms)

    def pot_mul(alpha: Form, w: ProductForm, side: str) -> ProductForm:
        terms = {}
        for wa, ca in alpha.terms.items():
            for (wx, wy), c in w.terms.items():
                key = (word_mul(wa, wx), wy) if side == "x" else \
                    (wx, word_mul(wa, wy))
                terms[key] = terms.get(key, Fraction(0)) + ca * c
        return ProductForm(terms)

    e_out = [d_block(e_coords[k]) for k in range(m)]
    for k in range(m):
        for l in range(m):
            if not potential_e[k][l].is_zero:
                e_out[k] = e_out[k] + pot_mul(potential_e[k][l], e_coords[l], "x")
    f_out = [d_block(f_coords[k]) for k in range(n)]
    for k in range(n):
        for l in range(n):
            if not potential_f[k][l].is_zero:
                f_out[k] = f_out[k] + pot_mul(potential_f[k][l], f_coords[l], "y")
    return e_out, f_out
