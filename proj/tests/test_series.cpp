#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <random>
#include <stdexcept>
#include <vector>

#include "qcrystal/report.hpp"
#include "qcrystal/series.hpp"

using namespace qcrystal;

namespace {

QSeries random_series(std::mt19937& rng, int trunc, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    QSeries s(trunc);
    for (int k = 0; k < trunc; ++k) s.set_coeff(k, d(rng));
    return s;
}

XLaurentSeries random_x_series(std::mt19937& rng, int trunc) {
    std::uniform_int_distribution<int> xd(0, 3);
    XLaurentSeries s(trunc);
    int parts = 1 + xd(rng);
    for (int p = 0; p < parts; ++p) s.set_x_part(xd(rng), random_series(rng, trunc, -4, 4));
    return s;
}

// Independent counting oracle: partitions of n into parts drawn from the
// given list, each usable any number of times.
std::vector<Coeff> partition_counts(int trunc, const std::vector<int>& parts) {
    std::vector<Coeff> p(static_cast<size_t>(trunc), 0);
    p[0] = 1;
    for (int part : parts)
        for (int n = part; n < trunc; ++n)
            p[static_cast<size_t>(n)] += p[static_cast<size_t>(n - part)];
    return p;
}

// Partitions into distinct parts 1..trunc-1 (0/1 knapsack).
std::vector<Coeff> distinct_counts(int trunc) {
    std::vector<Coeff> p(static_cast<size_t>(trunc), 0);
    p[0] = 1;
    for (int part = 1; part < trunc; ++part)
        for (int n = trunc - 1; n >= part; --n)
            p[static_cast<size_t>(n)] += p[static_cast<size_t>(n - part)];
    return p;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int k = lo; k <= hi; ++k) v.push_back(k);
    return v;
}

}  // namespace

TEST_CASE("construction and accessors") {
    QSeries z(5);
    CHECK(z.is_zero());
    CHECK(!z.valuation().has_value());
    CHECK(z.trunc() == 5);
    CHECK(z.str() == "0");

    QSeries s = QSeries::one(4);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(3) == 0);
    CHECK(s.valuation() == 0);
    CHECK_THROWS_AS(s.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(s.set_coeff(-1, 1), std::out_of_range);
    CHECK_THROWS_AS(QSeries(0), std::invalid_argument);

    QSeries m = QSeries::monomial(2, -3, 6);
    CHECK(m.coeff(2) == -3);
    CHECK(m.valuation() == 2);
    CHECK(m.str() == "-3q^2");
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937 rng(7321);
    QSeries zero(16);
    QSeries one = QSeries::one(16);
    for (int t = 0; t < 1000; ++t) {
        QSeries a = random_series(rng, 16);
        QSeries b = random_series(rng, 16);
        QSeries c = random_series(rng, 16);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == zero);
        CHECK(a * one == a);
        CHECK(a + zero == a);
    }
}

TEST_CASE("x-series ring axioms on randomized triples") {
    std::mt19937 rng(9911);
    XLaurentSeries zero(10);
    XLaurentSeries one = XLaurentSeries::one(10);
    for (int t = 0; t < 200; ++t) {
        XLaurentSeries a = random_x_series(rng, 10);
        XLaurentSeries b = random_x_series(rng, 10);
        XLaurentSeries c = random_x_series(rng, 10);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == zero);
        CHECK(a * one == a);
    }
}

TEST_CASE("inverse round-trips") {
    std::mt19937 rng(40121);
    for (int t = 0; t < 200; ++t) {
        QSeries a = random_series(rng, 20);
        a.set_coeff(0, (t % 2) ? 1 : -1);
        CHECK(a * a.inverse() == QSeries::one(20));
        CHECK(a.inverse() * a == QSeries::one(20));
    }
    for (int t = 0; t < 60; ++t) {
        XLaurentSeries a = random_x_series(rng, 10);
        QSeries unit = random_series(rng, 10);
        unit.set_coeff(0, 1);
        a.set_x_part(0, unit);
        // every other part must vanish at q^0 for the geometric expansion
        for (int xe : a.x_support())
            if (xe != 0) {
                QSeries part = a.x_part(xe);
                part.set_coeff(0, 0);
                part = part.shifted(1).truncated(10);
                a.set_x_part(xe, part);
            }
        CHECK(a * a.inverse() == XLaurentSeries::one(10));
    }
    CHECK_THROWS_AS(QSeries::monomial(0, 2, 5).inverse(), NonUnitConstantTerm);
    CHECK_THROWS_AS(QSeries(5).inverse(), NonUnitConstantTerm);
    // an x-part with nonzero constant q-coefficient cannot be inverted by
    // geometric expansion
    XLaurentSeries bad = XLaurentSeries::one(5) + XLaurentSeries::monomial(1, 0, 1, 5);
    CHECK_THROWS_AS(bad.inverse(), NonTerminating);
}

TEST_CASE("shifts and exact division") {
    QSeries s = QSeries::monomial(3, 4, 8);
    CHECK(s.shifted(2).coeff(5) == 4);
    CHECK(s.shifted(2).trunc() == 10);
    CHECK(s.shifted(-3).coeff(0) == 4);
    CHECK(s.shifted(-3).trunc() == 5);
    CHECK_THROWS_AS(QSeries::one(5).shifted(-1), InexactDivision);

    QPolynomial a = QPolynomial::monomial(0, 1) + QPolynomial::monomial(1, -2) +
                    QPolynomial::monomial(4, 7);
    QPolynomial b = QPolynomial::monomial(0, 1) + QPolynomial::monomial(2, 5);
    CHECK((a * b).divide_exact(b) == a);
    CHECK((a * b).divide_exact(a) == b);
    CHECK_THROWS_AS(QPolynomial::one().divide_exact(QPolynomial::monomial(1, 1)), InexactDivision);
    CHECK_THROWS_AS((QPolynomial::monomial(0, 1) + QPolynomial::monomial(1, 1))
                        .divide_exact(QPolynomial::monomial(0, 2)),
                    InexactDivision);
}

TEST_CASE("polynomial accessors and evaluation") {
    QPolynomial p;
    CHECK(p.is_zero());
    CHECK(!p.min_degree().has_value());
    CHECK(p.str() == "0");
    p.set_coeff(2, 3);
    p.set_coeff(5, -1);
    CHECK(p.min_degree() == 2);
    CHECK(p.max_degree() == 5);
    CHECK(p.eval_at_1() == 2);
    CHECK(p.str() == "3q^2 - q^5");
    CHECK(p.to_series(4).coeff(2) == 3);
    p.set_coeff(2, 0);
    CHECK(p.min_degree() == 5);
}

TEST_CASE("pochhammer products against counting oracles") {
    const int N = 50;
    // 1/(q;q)_inf generates all partitions
    QSeries all_parts = poch(1, 1, -1, N).inverse();
    std::vector<Coeff> p = partition_counts(N, range(1, N - 1));
    for (int n = 0; n < N; ++n) CHECK(all_parts.coeff(n) == p[static_cast<size_t>(n)]);
    CHECK(all_parts.coeff(10) == 42);
    CHECK(all_parts.coeff(20) == 627);

    // (-q;q)_inf generates partitions into distinct parts
    QSeries dist = poch_plus(1, 1, -1, N);
    std::vector<Coeff> d = distinct_counts(N);
    for (int n = 0; n < N; ++n) CHECK(dist.coeff(n) == d[static_cast<size_t>(n)]);
    CHECK(dist.coeff(10) == 10);

    // 1/((q;q^5)(q^4;q^5))_inf generates partitions into parts 1, 4 mod 5
    QSeries rr = (poch(1, 5, -1, N) * poch(4, 5, -1, N)).inverse();
    std::vector<int> parts14;
    for (int k = 1; k < N; ++k)
        if (k % 5 == 1 || k % 5 == 4) parts14.push_back(k);
    std::vector<Coeff> r = partition_counts(N, parts14);
    for (int n = 0; n < N; ++n) CHECK(rr.coeff(n) == r[static_cast<size_t>(n)]);

    // finite pochhammer: (q;q)_3 expanded by hand
    QSeries f = poch(1, 1, 3, 10);
    QSeries expected(10);
    // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
    expected.set_coeff(0, 1);
    expected.set_coeff(1, -1);
    expected.set_coeff(2, -1);
    expected.set_coeff(4, 1);
    expected.set_coeff(5, 1);
    expected.set_coeff(6, -1);
    CHECK(f == expected);

    CHECK_THROWS_AS(poch(0, 1, -1, 10), std::invalid_argument);
    CHECK_THROWS_AS(poch(1, 0, -1, 10), std::invalid_argument);
}

TEST_CASE("x-substitution and two-variable products") {
    // F(x) = 1 + x q + x^2 q^3 ; F(x q^2) = 1 + x q^3 + x^2 q^7
    XLaurentSeries f = XLaurentSeries::one(10) + XLaurentSeries::monomial(1, 1, 1, 10) +
                       XLaurentSeries::monomial(2, 3, 1, 10);
    XLaurentSeries g = f.substitute(2);
    CHECK(g.x_part(0) == QSeries::one(10));
    CHECK(g.x_part(1) == QSeries::monomial(3, 1, 10));
    CHECK(g.x_part(2) == QSeries::monomial(7, 1, 10));
    CHECK(f.substitute(0) == f);
    CHECK(f.eval_x1().coeff(1) == 1);
    CHECK(f.eval_x1().coeff(3) == 1);

    // prod_{j>=1} (1+x q^j) coefficient of x^n is q^{n(n+1)/2}/(q;q)_n
    XLaurentSeries xp = x_poch_plus(1, 1, 30);
    for (int n = 0; n <= 5; ++n) {
        QSeries expected =
            poch(1, 1, n, 30).inverse().shifted(n * (n + 1) / 2).truncated(30);
        CHECK(agree(xp.x_part(n), expected));
    }
    // substituting x -> x q^{-1} keeps x-part 0 but must drop the truncation
    XLaurentSeries neg = xp.substitute(-1);
    CHECK(neg.trunc() < xp.trunc());
    CHECK(agree(neg.x_part(1), poch(1, 1, 1, 25).inverse()));
}

TEST_CASE("mismatch location and ordering") {
    QSeries a = QSeries::one(10);
    QSeries b = QSeries::one(10);
    CHECK(!first_mismatch(a, b).has_value());
    b.set_coeff(7, 2);
    auto mm = first_mismatch(a, b);
    REQUIRE(mm.has_value());
    CHECK(mm->xdeg == 0);
    CHECK(mm->qdeg == 7);
    CHECK(mm->lhs == 0);
    CHECK(mm->rhs == 2);

    // mismatches are ordered by (x-degree, q-degree)
    XLaurentSeries u = XLaurentSeries::one(10);
    XLaurentSeries v = XLaurentSeries::one(10);
    v.set_x_part(1, QSeries::monomial(2, 1, 10));
    QSeries p0 = QSeries::one(10);
    p0.set_coeff(5, 3);
    u.set_x_part(0, p0);
    auto mx = first_mismatch(u, v);
    REQUIRE(mx.has_value());
    CHECK(mx->xdeg == 0);
    CHECK(mx->qdeg == 5);

    // agreement uses the weaker truncation
    CHECK(agree(QSeries::one(5), QSeries::one(50)));
}

TEST_CASE("json round-trips") {
    std::mt19937 rng(5150);
    for (int t = 0; t < 20; ++t) {
        XLaurentSeries s = random_x_series(rng, 8);
        XLaurentSeries back = series_from_json(series_json(s));
        CHECK(back == s);
    }
    QSeries q = random_series(rng, 12);
    XLaurentSeries wrapped = series_from_json(series_json(q));
    CHECK(wrapped == XLaurentSeries::from_q(q));

    Report r;
    r.identity = "sample";
    r.trunc = 12;
    r.pass = false;
    r.first_mismatch = Mismatch{1, 4, Coeff(3), Coeff("123456789012345678901234567890")};
    r.notes = {"shard one", "shard two"};
    Report back = report_from_json(report_json(r));
    CHECK(back.identity == r.identity);
    CHECK(back.trunc == r.trunc);
    CHECK(back.pass == r.pass);
    REQUIRE(back.first_mismatch.has_value());
    CHECK(back.first_mismatch->xdeg == 1);
    CHECK(back.first_mismatch->qdeg == 4);
    CHECK(back.first_mismatch->lhs == 3);
    CHECK(back.first_mismatch->rhs == Coeff("123456789012345678901234567890"));
    CHECK(back.notes == r.notes);

    Report ok = make_series_report("same", 6, QSeries::one(6), QSeries::one(6));
    CHECK(ok.pass);
    Report again = report_from_json(report_json(ok));
    CHECK(again.pass);
    CHECK(!again.first_mismatch.has_value());
}

TEST_CASE("text formatting") {
    QSeries s(8);
    s.set_coeff(0, 1);
    s.set_coeff(1, 1);
    s.set_coeff(2, 2);
    s.set_coeff(3, -1);
    CHECK(s.str() == "1 + q + 2q^2 - q^3");

    XLaurentSeries f = XLaurentSeries::monomial(2, 1, 1, 6) + XLaurentSeries::monomial(0, 0, 1, 6);
    CHECK(f.str() == "x^0: 1\nx^2: q");

    Report r = make_series_report("demo", 8, s, s);
    std::string text = format_text(r);
    CHECK(text.find("demo: PASS (mod q^8)") != std::string::npos);
}
