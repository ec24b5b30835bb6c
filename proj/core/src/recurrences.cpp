#include "qcrystal/recurrences.hpp"

namespace qcrystal {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

QPolynomial one_minus_qpow(int e) {
    // e == 0 gives the zero polynomial; the recurrences rely on these factors
    // vanishing to cut off terms that would otherwise reach below index 0.
    if (e == 0) return QPolynomial();
    require(e > 0, "one_minus_qpow: negative exponent reached with a nonzero cofactor");
    return QPolynomial::one() - QPolynomial::monomial(e, 1);
}

QSeries geometric_inverse(int e, int trunc) {  // 1/(1 - q^e)
    QSeries s(trunc);
    for (int k = 0; k < trunc; k += e) s.set_coeff(k, 1);
    return s;
}

}  // namespace

std::vector<QPolynomial> b_table(int i, int n_max) {
    require(i == 1 || i == 2, "b_table: variant must be 1 or 2");
    require(n_max >= 0, "b_table: n_max must be >= 0");
    std::vector<QPolynomial> b;
    b.push_back(QPolynomial::one());
    if (n_max >= 1) b.push_back(i == 1 ? QPolynomial::monomial(1, 1) : QPolynomial());
    for (int n = 0; n + 2 <= n_max; ++n)
        b.push_back(QPolynomial::monomial(n + 2, 1) * b[static_cast<size_t>(n)] -
                    QPolynomial::monomial(n + 1, 1) * b[static_cast<size_t>(n) + 1]);
    return b;
}

std::vector<QPolynomial> c_table(int i, int n_max) {
    require(i == 1 || i == 2, "c_table: variant must be 1 or 2");
    require(n_max >= 0, "c_table: n_max must be >= 0");
    std::vector<QPolynomial> c;
    c.push_back(QPolynomial::one());
    if (n_max >= 1) c.push_back(QPolynomial::monomial(i, 1) + QPolynomial::monomial(3, 1));
    for (int n = 0; n + 2 <= n_max; ++n) {
        QPolynomial next;
        next -= QPolynomial::monomial(3 * n + 3, 1) * one_minus_qpow(3) * c[static_cast<size_t>(n) + 1];
        QPolynomial middle = QPolynomial::one() + QPolynomial::monomial(1, 1) +
                             QPolynomial::monomial(3 * n + 2, 2);
        next += QPolynomial::monomial(3 * n + 4, 1) * middle * c[static_cast<size_t>(n)];
        QPolynomial cutoff = one_minus_qpow(3 * n);
        if (!cutoff.is_zero()) {
            next -= QPolynomial::monomial(6 * n + 3, 1) * one_minus_qpow(3) * cutoff *
                    c[static_cast<size_t>(n) - 1];
            QPolynomial cutoff2 = one_minus_qpow(3 * n - 3);
            if (!cutoff2.is_zero())
                next -= QPolynomial::monomial(6 * n + 3, 1) * cutoff * cutoff2 *
                        c[static_cast<size_t>(n) - 2];
        }
        c.push_back(std::move(next));
    }
    return c;
}

namespace {

struct FamilyTraits {
    int step;        // exponent step of the factorial-type products
    int depth;       // how many trailing high-valuation entries end the sum
    std::vector<QPolynomial> (*table)(int, int);
};

FamilyTraits traits_for(char family) {
    if (family == 'b') return {1, 2, &b_table};
    if (family == 'c') return {3, 4, &c_table};
    throw std::invalid_argument("family must be 'b' or 'c'");
}

}  // namespace

QSeries theorem_sum(char family, int i, int trunc) {
    FamilyTraits tr = traits_for(family);
    // Entries are generated on the fly; the recurrence only ever multiplies
    // by positive powers of q, so once depth-many consecutive entries are 0
    // mod q^trunc every later entry is too.
    std::vector<QPolynomial> table = tr.table(i, 1);
    QSeries acc(trunc);
    QSeries inv = QSeries::one(trunc);
    int quiet = 0;
    for (int n = 0;; ++n) {
        if (n > 10 * trunc + 50)
            throw NonTerminating("theorem_sum: entries failed to leave the truncation window");
        if (n >= static_cast<int>(table.size())) table = tr.table(i, n);
        const QPolynomial& poly = table[static_cast<size_t>(n)];
        if (n > 0) inv = inv * geometric_inverse(tr.step * n, trunc);
        auto mindeg = poly.min_degree();
        if (!mindeg.has_value() || *mindeg >= trunc) {
            if (++quiet >= tr.depth) break;
            continue;
        }
        quiet = 0;
        acc += poly.to_series(trunc) * inv;
    }
    return acc;
}

QSeries theorem_product(char family, int i, int trunc) {
    traits_for(family);
    require(i == 1 || i == 2, "theorem_product: variant must be 1 or 2");
    if (family == 'b')
        return (poch(i, 5, -1, trunc) * poch(5 - i, 5, -1, trunc)).inverse();
    if (i == 1) {
        QSeries num = poch(2, 12, -1, trunc) * poch(10, 12, -1, trunc);
        QSeries den = poch(1, 12, -1, trunc) * poch(3, 12, -1, trunc) * poch(5, 12, -1, trunc) *
                      poch(7, 12, -1, trunc) * poch(9, 12, -1, trunc) * poch(11, 12, -1, trunc);
        return num * den.inverse();
    }
    return (poch(2, 12, -1, trunc) * poch(3, 12, -1, trunc) * poch(9, 12, -1, trunc) *
            poch(10, 12, -1, trunc))
        .inverse();
}

Report verify_theorem(char family, int i, int trunc) {
    QSeries lhs = theorem_sum(family, i, trunc);
    QSeries rhs = theorem_product(family, i, trunc);
    std::string id = std::string(1, family) + "_sum_product_i" + std::to_string(i);
    return make_series_report(id, trunc, lhs, rhs);
}

namespace {

// All nonzero coefficients strictly positive (+1) or strictly negative (-1);
// 0 for the zero polynomial, 2 for mixed signs.
int sign_class(const QPolynomial& p) {
    bool pos = false, neg = false;
    for (const auto& [e, c] : p.terms()) (c > 0 ? pos : neg) = true;
    if (pos && neg) return 2;
    if (pos) return 1;
    if (neg) return -1;
    return 0;
}

}  // namespace

Report specializations(char family, int n_max) {
    Report r;
    r.identity = std::string(1, family) + "_specializations";
    r.pass = true;
    r.notes.push_back("table indices 0.." + std::to_string(n_max));
    auto fail = [&r](const std::string& note) {
        r.pass = false;
        r.notes.push_back("FAILED: " + note);
    };
    for (int i = 1; i <= 2; ++i) {
        std::string tag = "variant " + std::to_string(i) + ": ";
        if (family == 'b') {
            std::vector<QPolynomial> b = b_table(i, n_max);
            for (int n = 3; n <= n_max; ++n) {
                int sc = sign_class(b[static_cast<size_t>(n)]);
                int expected = (n + i) % 2 == 0 ? 1 : -1;
                if (sc == 0) {
                    r.notes.push_back(tag + "entry " + std::to_string(n) +
                                      " is zero; sign check vacuous");
                } else if (sc != expected) {
                    fail(tag + "entry " + std::to_string(n) + " breaks the alternating sign rule");
                }
            }
            int s = i == 1 ? 3 : 2;  // first index of the two seed values
            std::vector<Coeff> vals;
            for (int n = s; n <= n_max; ++n) {
                Coeff v = b[static_cast<size_t>(n)].eval_at_1();
                vals.push_back(v < 0 ? Coeff(-v) : v);
            }
            if (vals.size() >= 2 && (vals[0] != 1 || vals[1] != 1))
                fail(tag + "seed values at q=1 are not 1, 1");
            for (size_t k = 2; k < vals.size(); ++k)
                if (vals[k] != vals[k - 1] + vals[k - 2])
                    fail(tag + "value at q=1 breaks the addition rule at index " +
                         std::to_string(s + static_cast<int>(k)));
            if (r.pass)
                r.notes.push_back(tag + "absolute values at q=1 follow the addition rule from index " +
                                  std::to_string(s));
        } else {
            std::vector<QPolynomial> c = c_table(i, n_max);
            Coeff expected = 1;
            for (int n = 0; n <= n_max; ++n) {
                if (c[static_cast<size_t>(n)].eval_at_1() != expected)
                    fail(tag + "value at q=1 is not 2^" + std::to_string(n) + " at index " +
                         std::to_string(n));
                expected *= 2;
            }
            bool nonneg = true;
            int upto = std::min(n_max, 12);
            for (int n = 0; n <= upto; ++n)
                if (sign_class(c[static_cast<size_t>(n)]) == 2 ||
                    sign_class(c[static_cast<size_t>(n)]) == -1)
                    nonneg = false;
            r.notes.push_back(tag + std::string("coefficient nonnegativity through index ") +
                              std::to_string(upto) + (nonneg ? " observed" : " VIOLATED") +
                              " (reported, not asserted)");
        }
    }
    return r;
}

}  // namespace qcrystal
