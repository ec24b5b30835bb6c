#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcrystal {

using Coeff = boost::multiprecision::cpp_int;

struct NonUnitConstantTerm : std::runtime_error {
    explicit NonUnitConstantTerm(const std::string& msg) : std::runtime_error(msg) {}
};

struct InexactDivision : std::runtime_error {
    explicit InexactDivision(const std::string& msg) : std::runtime_error(msg) {}
};

// An iterative computation could not reach its truncation order.
struct NonTerminating : std::runtime_error {
    explicit NonTerminating(const std::string& msg) : std::runtime_error(msg) {}
};

// Power series in q with exact integer coefficients, known modulo q^trunc.
// Binary operations truncate to the weaker operand; no floating point anywhere.
class QSeries {
public:
    explicit QSeries(int trunc);
    static QSeries one(int trunc);
    static QSeries monomial(int qexp, const Coeff& c, int trunc);

    int trunc() const { return trunc_; }
    const Coeff& coeff(int qexp) const;
    void set_coeff(int qexp, const Coeff& c);
    bool is_zero() const;
    std::optional<int> valuation() const;  // nullopt for the zero series

    QSeries truncated(int new_trunc) const;  // new_trunc <= trunc
    // Multiply by q^qexp.  A negative shift must divide exactly and lowers trunc.
    QSeries shifted(int qexp) const;
    // Constant term must be +1 or -1; result is a two-sided inverse mod q^trunc.
    QSeries inverse() const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
    friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
    friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);
    QSeries operator*(const Coeff& c) const;
    bool operator==(const QSeries& rhs) const;  // same trunc and same coefficients

    std::string str() const;

private:
    int trunc_;
    std::vector<Coeff> c_;
};

// True iff a and b agree on every power below min(a.trunc, b.trunc).
bool agree(const QSeries& a, const QSeries& b);

// Sparse polynomial in q with exact integer coefficients; no truncation,
// so q=1 evaluation and degree queries are exact.
class QPolynomial {
public:
    QPolynomial() = default;
    static QPolynomial one();
    static QPolynomial monomial(int qexp, const Coeff& c);

    bool is_zero() const { return terms_.empty(); }
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;
    Coeff coeff(int qexp) const;
    void set_coeff(int qexp, const Coeff& c);
    Coeff eval_at_1() const;
    const std::map<int, Coeff>& terms() const { return terms_; }

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
    friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
    friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
    bool operator==(const QPolynomial& rhs) const { return terms_ == rhs.terms_; }

    // Exact quotient by ascending-power division; InexactDivision if the
    // divisor does not divide exactly.
    QPolynomial divide_exact(const QPolynomial& divisor) const;

    QSeries to_series(int trunc) const;
    std::string str() const;

private:
    std::map<int, Coeff> terms_;  // only nonzero coefficients are stored
};

// Finite-support map x-degree -> QSeries, all parts sharing one truncation
// order.  x-degrees may be negative; identically-zero parts are pruned.
class XLaurentSeries {
public:
    explicit XLaurentSeries(int trunc);
    static XLaurentSeries one(int trunc);
    static XLaurentSeries monomial(int xexp, int qexp, const Coeff& c, int trunc);
    static XLaurentSeries from_q(const QSeries& s);

    int trunc() const { return trunc_; }
    QSeries x_part(int xexp) const;  // zero series when absent
    void set_x_part(int xexp, const QSeries& s);
    std::vector<int> x_support() const;
    bool is_zero() const;
    QSeries eval_x1() const;  // sum of all parts (set x = 1)

    XLaurentSeries truncated(int new_trunc) const;
    // x -> x*q^qstep.  The part at x-degree e is shifted by qstep*e; negative
    // shifts must divide exactly and lower the shared trunc.
    XLaurentSeries substitute(int qstep) const;
    // Needs a +-1 constant term at x-degree 0 and q-valuation >= 1 at every
    // other x-degree, so that the geometric series terminates mod q^trunc.
    XLaurentSeries inverse() const;

    XLaurentSeries operator-() const;
    XLaurentSeries& operator+=(const XLaurentSeries& rhs);
    XLaurentSeries& operator-=(const XLaurentSeries& rhs);
    friend XLaurentSeries operator+(XLaurentSeries lhs, const XLaurentSeries& rhs) { return lhs += rhs; }
    friend XLaurentSeries operator-(XLaurentSeries lhs, const XLaurentSeries& rhs) { return lhs -= rhs; }
    friend XLaurentSeries operator*(const XLaurentSeries& lhs, const XLaurentSeries& rhs);
    XLaurentSeries operator*(const QSeries& s) const;
    bool operator==(const XLaurentSeries& rhs) const;

    std::string str() const;

private:
    int trunc_;
    std::map<int, QSeries> terms_;
    void prune();
};

bool agree(const XLaurentSeries& a, const XLaurentSeries& b);

struct Mismatch {
    int xdeg;
    int qdeg;
    Coeff lhs;
    Coeff rhs;
};

// First disagreement below the common truncation, ordered by (xdeg, qdeg).
std::optional<Mismatch> first_mismatch(const XLaurentSeries& a, const XLaurentSeries& b);
std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b);

// prod_{j=0}^{count-1} (1 - q^{a+j*m}) mod q^trunc; count < 0 means the
// infinite product (factors with exponent >= trunc are 1).
QSeries poch(int a, int m, int count, int trunc);
// Same with factors (1 + q^{a+j*m}).
QSeries poch_plus(int a, int m, int count, int trunc);
// prod_{j>=0} (1 + x*q^{a+j*m}) mod q^trunc.
XLaurentSeries x_poch_plus(int a, int m, int trunc);

}  // namespace qcrystal
