#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <string>

#include "qcrystal/transfer.hpp"

using namespace qcrystal;

TEST_CASE("two-position shift exponents at hand-checked prefixes") {
    // ground prefix onto ground prefix: no shift at all
    CHECK(f_g_prime({3, 0}, {3, 0}) == std::pair<int, int>{0, 0});
    // the all-zero prefix is the farthest from ground
    CHECK(f_g_prime({0, 0}, {0, 0}) == std::pair<int, int>{6, 9});
    // one step away from ground in the outer prefix only: the new path is
    // the single-deviation path of degree 1 and modified length 1
    CHECK(f_g_prime({3, 0}, {2, 0}) == std::pair<int, int>{1, 1});
}

TEST_CASE("matrix construction and reference table") {
    MonomialMatrix m = build_matrix_M();
    CHECK(m.convention == "row 1 + 4*(first letter) + (second letter)");

    // ground-ground cell is the identity monomial
    CHECK(m.cells[12][12] == Monomial{0, 0});

    // spot cells, rows indexed by the outer prefix, columns by the inner
    CHECK(m.cells[0][0] == Monomial{6, 9});    // row 1, first block
    CHECK(m.cells[0][15] == Monomial{3, 3});   // row 1, last block
    CHECK(m.cells[7][0] == Monomial{1, 1});    // row 8, first block
    CHECK(m.cells[3][0] == Monomial{0, 0});    // row 4, first block
    CHECK(m.cells[15][0] == Monomial{3, 3});   // row 16, first block
    CHECK(m.cells[15][15] == Monomial{6, 9});  // row 16, last block

    // cells depend on the inner prefix only through its first letter:
    // the four columns of each block are identical
    for (int row = 0; row < 16; ++row)
        for (int q1 = 0; q1 < 4; ++q1)
            for (int q2 = 1; q2 < 4; ++q2)
                CHECK(m.cells[row][4 * q1 + q2] == m.cells[row][4 * q1]);

    Report r = verify_matrix(0);
    CHECK(r.pass);
}

TEST_CASE("sixteen-fold refinement relation") {
    Report r = verify_transfer(12);
    CHECK(r.pass);
    bool window_logged = false;
    for (const std::string& note : r.notes)
        if (note.find("window") != std::string::npos) window_logged = true;
    CHECK(window_logged);
}

TEST_CASE("functional equations at moderate truncation") {
    CHECK(verify_qdif(12).pass);
    Report r = verify_qdif2(12);
    CHECK(r.pass);
    bool recurrence_note = false;
    for (const std::string& note : r.notes)
        if (note.find("recurrence") != std::string::npos) recurrence_note = true;
    CHECK(recurrence_note);
}

TEST_CASE("series quotient reproduces both polynomial tables") {
    for (int i = 1; i <= 2; ++i) {
        Report r = coefficient_bridge(i, 14);
        CHECK(r.pass);
        // the reciprocal reading must be explicitly falsified
        bool falsified = false;
        for (const std::string& note : r.notes)
            if (note.find("reciprocal") != std::string::npos) falsified = true;
        CHECK(falsified);
    }
}
