#include "qcrystal/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qcrystal {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

QSeries::QSeries(int trunc) : trunc_(trunc), c_(static_cast<size_t>(trunc)) {
    require(trunc >= 1, "QSeries truncation order must be >= 1");
}

QSeries QSeries::one(int trunc) {
    QSeries s(trunc);
    s.c_[0] = 1;
    return s;
}

QSeries QSeries::monomial(int qexp, const Coeff& c, int trunc) {
    require(qexp >= 0, "QSeries monomial exponent must be >= 0");
    QSeries s(trunc);
    if (qexp < trunc) s.c_[static_cast<size_t>(qexp)] = c;
    return s;
}

const Coeff& QSeries::coeff(int qexp) const {
    if (qexp < 0 || qexp >= trunc_) throw std::out_of_range("QSeries::coeff beyond truncation");
    return c_[static_cast<size_t>(qexp)];
}

void QSeries::set_coeff(int qexp, const Coeff& c) {
    if (qexp < 0 || qexp >= trunc_) throw std::out_of_range("QSeries::set_coeff beyond truncation");
    c_[static_cast<size_t>(qexp)] = c;
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coeff& c) { return c == 0; });
}

std::optional<int> QSeries::valuation() const {
    for (int k = 0; k < trunc_; ++k)
        if (c_[static_cast<size_t>(k)] != 0) return k;
    return std::nullopt;
}

QSeries QSeries::truncated(int new_trunc) const {
    require(new_trunc >= 1 && new_trunc <= trunc_, "QSeries::truncated cannot raise the order");
    QSeries s(new_trunc);
    std::copy(c_.begin(), c_.begin() + new_trunc, s.c_.begin());
    return s;
}

QSeries QSeries::shifted(int qexp) const {
    if (qexp >= 0) {
        QSeries s(trunc_ + qexp);
        for (int k = 0; k < trunc_; ++k) s.c_[static_cast<size_t>(k + qexp)] = c_[static_cast<size_t>(k)];
        return s;
    }
    for (int k = 0; k < -qexp && k < trunc_; ++k)
        if (c_[static_cast<size_t>(k)] != 0)
            throw InexactDivision("QSeries::shifted: valuation too small for negative shift");
    int nt = trunc_ + qexp;
    if (nt < 1) {
        if (is_zero()) return QSeries(1);
        throw std::invalid_argument("QSeries::shifted: negative shift exhausts the truncation order");
    }
    QSeries s(nt);
    for (int k = 0; k < nt; ++k) s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k - qexp)];
    return s;
}

QSeries QSeries::inverse() const {
    const Coeff& a0 = c_[0];
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantTerm("QSeries::inverse needs constant term +1 or -1");
    QSeries r(trunc_);
    r.c_[0] = a0;  // a0^{-1} == a0 for a unit +-1
    for (int n = 1; n < trunc_; ++n) {
        Coeff acc = 0;
        for (int k = 1; k <= n; ++k) {
            const Coeff& ak = c_[static_cast<size_t>(k)];
            if (ak != 0) acc += ak * r.c_[static_cast<size_t>(n - k)];
        }
        r.c_[static_cast<size_t>(n)] = -a0 * acc;
    }
    return r;
}

QSeries QSeries::operator-() const {
    QSeries s(trunc_);
    for (int k = 0; k < trunc_; ++k) s.c_[static_cast<size_t>(k)] = -c_[static_cast<size_t>(k)];
    return s;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    int nt = std::min(trunc_, rhs.trunc_);
    c_.resize(static_cast<size_t>(nt));
    trunc_ = nt;
    for (int k = 0; k < nt; ++k) c_[static_cast<size_t>(k)] += rhs.c_[static_cast<size_t>(k)];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    int nt = std::min(trunc_, rhs.trunc_);
    c_.resize(static_cast<size_t>(nt));
    trunc_ = nt;
    for (int k = 0; k < nt; ++k) c_[static_cast<size_t>(k)] -= rhs.c_[static_cast<size_t>(k)];
    return *this;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
    int nt = std::min(lhs.trunc_, rhs.trunc_);
    QSeries r(nt);
    for (int i = 0; i < nt; ++i) {
        const Coeff& a = lhs.c_[static_cast<size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; i + j < nt; ++j) {
            const Coeff& b = rhs.c_[static_cast<size_t>(j)];
            if (b != 0) r.c_[static_cast<size_t>(i + j)] += a * b;
        }
    }
    return r;
}

QSeries QSeries::operator*(const Coeff& c) const {
    QSeries r(trunc_);
    for (int k = 0; k < trunc_; ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * c;
    return r;
}

bool QSeries::operator==(const QSeries& rhs) const {
    return trunc_ == rhs.trunc_ && c_ == rhs.c_;
}

namespace {

void append_term(std::ostringstream& out, bool first, const Coeff& c, int qexp) {
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || qexp == 0) out << mag.str();
    if (qexp == 1)
        out << "q";
    else if (qexp > 1)
        out << "q^" << qexp;
}

}  // namespace

std::string QSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < trunc_; ++k) {
        const Coeff& c = c_[static_cast<size_t>(k)];
        if (c == 0) continue;
        append_term(out, first, c, k);
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

bool agree(const QSeries& a, const QSeries& b) {
    int nt = std::min(a.trunc(), b.trunc());
    for (int k = 0; k < nt; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

QPolynomial QPolynomial::one() { return monomial(0, 1); }

QPolynomial QPolynomial::monomial(int qexp, const Coeff& c) {
    QPolynomial p;
    if (c != 0) p.terms_[qexp] = c;
    return p;
}

std::optional<int> QPolynomial::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> QPolynomial::max_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Coeff QPolynomial::coeff(int qexp) const {
    auto it = terms_.find(qexp);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void QPolynomial::set_coeff(int qexp, const Coeff& c) {
    if (c == 0)
        terms_.erase(qexp);
    else
        terms_[qexp] = c;
}

Coeff QPolynomial::eval_at_1() const {
    Coeff acc = 0;
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial p;
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        Coeff nc = coeff(e) + c;
        set_coeff(e, nc);
    }
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        Coeff nc = coeff(e) - c;
        set_coeff(e, nc);
    }
    return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
    QPolynomial r;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            Coeff nc = r.coeff(ea + eb) + ca * cb;
            r.set_coeff(ea + eb, nc);
        }
    return r;
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& divisor) const {
    require(!divisor.is_zero(), "QPolynomial::divide_exact by zero polynomial");
    if (is_zero()) return QPolynomial();
    // Exact quotients satisfy deg(quotient) = deg(*this) - deg(divisor); any
    // step past that bound proves the division is not exact.
    int max_qexp = *max_degree() - *divisor.max_degree();
    int dmin = *divisor.min_degree();
    const Coeff& dlow = divisor.terms_.begin()->second;
    QPolynomial quot;
    QPolynomial rem = *this;
    while (!rem.is_zero()) {
        int rmin = *rem.min_degree();
        int e = rmin - dmin;
        if (e < 0 || e > max_qexp)
            throw InexactDivision("QPolynomial::divide_exact: divisor does not divide exactly");
        const Coeff& rlow = rem.terms_.begin()->second;
        if (rlow % dlow != 0)
            throw InexactDivision("QPolynomial::divide_exact: coefficient not divisible");
        QPolynomial t = monomial(e, rlow / dlow);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

QSeries QPolynomial::to_series(int trunc) const {
    QSeries s(trunc);
    for (const auto& [e, c] : terms_) {
        if (e < 0) throw std::invalid_argument("QPolynomial::to_series: negative exponent");
        if (e < trunc) s.set_coeff(e, c);
    }
    return s;
}

std::string QPolynomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(out, first, c, e);
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

XLaurentSeries::XLaurentSeries(int trunc) : trunc_(trunc) {
    require(trunc >= 1, "XLaurentSeries truncation order must be >= 1");
}

XLaurentSeries XLaurentSeries::one(int trunc) {
    XLaurentSeries s(trunc);
    s.terms_.emplace(0, QSeries::one(trunc));
    return s;
}

XLaurentSeries XLaurentSeries::monomial(int xexp, int qexp, const Coeff& c, int trunc) {
    XLaurentSeries s(trunc);
    s.terms_.emplace(xexp, QSeries::monomial(qexp, c, trunc));
    s.prune();
    return s;
}

XLaurentSeries XLaurentSeries::from_q(const QSeries& s) {
    XLaurentSeries r(s.trunc());
    r.terms_.emplace(0, s);
    r.prune();
    return r;
}

QSeries XLaurentSeries::x_part(int xexp) const {
    auto it = terms_.find(xexp);
    return it == terms_.end() ? QSeries(trunc_) : it->second;
}

void XLaurentSeries::set_x_part(int xexp, const QSeries& s) {
    if (s.trunc() < trunc_) {
        // A weaker part weakens the whole series.
        trunc_ = s.trunc();
        for (auto& [e, part] : terms_) part = part.truncated(trunc_);
        terms_.insert_or_assign(xexp, s);
    } else {
        terms_.insert_or_assign(xexp, s.truncated(trunc_));
    }
    prune();
}

std::vector<int> XLaurentSeries::x_support() const {
    std::vector<int> v;
    for (const auto& [e, part] : terms_) v.push_back(e);
    return v;
}

bool XLaurentSeries::is_zero() const { return terms_.empty(); }

QSeries XLaurentSeries::eval_x1() const {
    QSeries acc(trunc_);
    for (const auto& [e, part] : terms_) acc += part;
    return acc;
}

XLaurentSeries XLaurentSeries::truncated(int new_trunc) const {
    XLaurentSeries s(new_trunc);
    for (const auto& [e, part] : terms_) s.terms_.emplace(e, part.truncated(new_trunc));
    s.prune();
    return s;
}

XLaurentSeries XLaurentSeries::substitute(int qstep) const {
    // First find the truncation the shifted parts can support.
    int nt = trunc_;
    for (const auto& [e, part] : terms_) nt = std::min(nt, trunc_ + qstep * e);
    if (nt < 1) throw std::invalid_argument("XLaurentSeries::substitute exhausts the truncation order");
    XLaurentSeries r(nt);
    for (const auto& [e, part] : terms_) r.terms_.emplace(e, part.shifted(qstep * e).truncated(nt));
    r.prune();
    return r;
}

XLaurentSeries XLaurentSeries::inverse() const {
    QSeries a0 = x_part(0);
    QSeries inv0 = a0.inverse();  // enforces the unit constant term
    for (const auto& [e, part] : terms_) {
        if (e == 0) continue;
        auto v = part.valuation();
        if (v.has_value() && *v < 1)
            throw NonTerminating("XLaurentSeries::inverse: nonzero x-part with q-valuation 0");
    }
    XLaurentSeries rem = one(trunc_) - *this * inv0;  // every x-part has q-valuation >= 1
    XLaurentSeries acc = one(trunc_);
    XLaurentSeries pw = one(trunc_);
    for (int k = 1; k <= trunc_; ++k) {
        pw = pw * rem;
        if (pw.is_zero()) return acc * inv0;
        acc += pw;
    }
    throw NonTerminating("XLaurentSeries::inverse: geometric series did not terminate");
}

XLaurentSeries XLaurentSeries::operator-() const {
    XLaurentSeries s(trunc_);
    for (const auto& [e, part] : terms_) s.terms_.emplace(e, -part);
    return s;
}

XLaurentSeries& XLaurentSeries::operator+=(const XLaurentSeries& rhs) {
    int nt = std::min(trunc_, rhs.trunc_);
    XLaurentSeries r(nt);
    for (const auto& [e, part] : terms_) r.terms_.emplace(e, part.truncated(nt));
    for (const auto& [e, part] : rhs.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end())
            r.terms_.emplace(e, part.truncated(nt));
        else
            it->second += part;
    }
    r.prune();
    return *this = r;
}

XLaurentSeries& XLaurentSeries::operator-=(const XLaurentSeries& rhs) {
    return *this += -rhs;
}

XLaurentSeries operator*(const XLaurentSeries& lhs, const XLaurentSeries& rhs) {
    int nt = std::min(lhs.trunc_, rhs.trunc_);
    XLaurentSeries r(nt);
    for (const auto& [ea, pa] : lhs.terms_)
        for (const auto& [eb, pb] : rhs.terms_) {
            QSeries prod = pa.truncated(nt) * pb.truncated(nt);
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end())
                r.terms_.emplace(ea + eb, std::move(prod));
            else
                it->second += prod;
        }
    r.prune();
    return r;
}

XLaurentSeries XLaurentSeries::operator*(const QSeries& s) const {
    int nt = std::min(trunc_, s.trunc());
    XLaurentSeries r(nt);
    for (const auto& [e, part] : terms_) r.terms_.emplace(e, part.truncated(nt) * s.truncated(nt));
    r.prune();
    return r;
}

bool XLaurentSeries::operator==(const XLaurentSeries& rhs) const {
    return trunc_ == rhs.trunc_ && terms_ == rhs.terms_;
}

std::string XLaurentSeries::str() const {
    std::ostringstream out;
    if (terms_.empty()) return "0";
    bool first = true;
    for (const auto& [e, part] : terms_) {
        if (!first) out << "\n";
        out << "x^" << e << ": " << part.str();
        first = false;
    }
    return out.str();
}

void XLaurentSeries::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool agree(const XLaurentSeries& a, const XLaurentSeries& b) {
    return !first_mismatch(a, b).has_value();
}

std::optional<Mismatch> first_mismatch(const XLaurentSeries& a, const XLaurentSeries& b) {
    int nt = std::min(a.trunc(), b.trunc());
    std::set<int> xs;
    for (int e : a.x_support()) xs.insert(e);
    for (int e : b.x_support()) xs.insert(e);
    for (int e : xs) {
        QSeries pa = a.x_part(e);
        QSeries pb = b.x_part(e);
        for (int k = 0; k < nt; ++k)
            if (pa.coeff(k) != pb.coeff(k)) return Mismatch{e, k, pa.coeff(k), pb.coeff(k)};
    }
    return std::nullopt;
}

std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b) {
    int nt = std::min(a.trunc(), b.trunc());
    for (int k = 0; k < nt; ++k)
        if (a.coeff(k) != b.coeff(k)) return Mismatch{0, k, a.coeff(k), b.coeff(k)};
    return std::nullopt;
}

namespace {

QSeries poch_impl(int a, int m, int count, int trunc, int sign) {
    require(a >= 1 && m >= 1, "poch: base exponent and step must be >= 1");
    QSeries acc = QSeries::one(trunc);
    for (int j = 0;; ++j) {
        long long e = static_cast<long long>(a) + static_cast<long long>(j) * m;
        if (count >= 0 && j >= count) break;
        if (e >= trunc) {
            if (count < 0) break;
            continue;  // finite factor congruent to 1 mod q^trunc
        }
        QSeries factor = QSeries::one(trunc);
        factor.set_coeff(static_cast<int>(e), sign);
        acc = acc * factor;
    }
    return acc;
}

}  // namespace

QSeries poch(int a, int m, int count, int trunc) { return poch_impl(a, m, count, trunc, -1); }

QSeries poch_plus(int a, int m, int count, int trunc) { return poch_impl(a, m, count, trunc, 1); }

XLaurentSeries x_poch_plus(int a, int m, int trunc) {
    require(a >= 1 && m >= 1, "x_poch_plus: base exponent and step must be >= 1");
    XLaurentSeries acc = XLaurentSeries::one(trunc);
    for (int e = a; e < trunc; e += m)
        acc = acc * (XLaurentSeries::one(trunc) + XLaurentSeries::monomial(1, e, 1, trunc));
    return acc;
}

}  // namespace qcrystal
