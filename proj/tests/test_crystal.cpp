#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <random>
#include <vector>

#include "qcrystal/crystal.hpp"
#include "qcrystal/report.hpp"

using namespace qcrystal;

TEST_CASE("arrow, string and weight tables") {
    const PerfectCrystalSpec& spec = b13();
    CHECK(spec.name == "b13");
    CHECK(spec.elements == std::vector<int>{0, 1, 2, 3});
    CHECK(spec.level == 3);
    CHECK(spec.ht_delta == 2);
    CHECK(spec.marks == std::array<int, 2>{1, 1});
    CHECK(spec.comarks == std::array<int, 2>{1, 1});

    // color 1 raises the letter, color 0 lowers it
    for (int k = 0; k < 4; ++k) {
        if (k < 3) {
            CHECK(spec.f_arrow[1].at(k) == k + 1);
            CHECK(spec.e_arrow[0].at(k) == k + 1);
        } else {
            CHECK(spec.f_arrow[1].count(k) == 0);
            CHECK(spec.e_arrow[0].count(k) == 0);
        }
        if (k > 0) {
            CHECK(spec.f_arrow[0].at(k) == k - 1);
            CHECK(spec.e_arrow[1].at(k) == k - 1);
        } else {
            CHECK(spec.f_arrow[0].count(k) == 0);
            CHECK(spec.e_arrow[1].count(k) == 0);
        }
        CHECK(spec.eps_at(1, k) == k);
        CHECK(spec.phi_at(1, k) == 3 - k);
        CHECK(spec.eps_at(0, k) == 3 - k);
        CHECK(spec.phi_at(0, k) == k);
        CHECK(spec.classical_weight.at(k) == std::array<int, 2>{2 * k - 3, 3 - 2 * k});
    }

    const int expected_energy[4][4] = {
        {0, -1, -2, -3},
        {0, -1, -2, -2},
        {0, -1, -1, -1},
        {0, 0, 0, 0},
    };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(spec.energy(a, b) == expected_energy[a][b]);

    CHECK_NOTHROW(validate_crystal(spec));
}

TEST_CASE("crystal json matches the golden file") {
    std::ifstream in(std::string(QCRYSTAL_TEST_DATA_DIR) + "/b13.json");
    REQUIRE(in.good());
    nlohmann::json golden = nlohmann::json::parse(in);
    CHECK(crystal_json(b13()) == golden);
}

TEST_CASE("ground state sequences") {
    const PerfectCrystalSpec& spec = b13();

    GroundState g30 = ground_state(spec, {3, 0});
    CHECK(g30.elems == std::vector<int>{3, 0});
    CHECK(g30.period() == 2);
    CHECK(g30.at(1) == 3);
    CHECK(g30.at(2) == 0);
    CHECK(g30.at(7) == 3);

    GroundState g21 = ground_state(spec, {2, 1});
    CHECK(g21.elems == std::vector<int>{2, 1});

    GroundState g03 = ground_state(spec, {0, 3});
    CHECK(g03.elems == std::vector<int>{0, 3});

    GroundState g12 = ground_state(spec, {1, 2});
    CHECK(g12.elems == std::vector<int>{1, 2});

    // wrong level: no element has the required string lengths
    CHECK_THROWS_AS(ground_state(spec, {1, 1}), NoGroundElement);
    CHECK_THROWS_AS(ground_state(spec, {4, 0}), NoGroundElement);
    CHECK_THROWS_AS(ground_state(spec, {0, 0}), NoGroundElement);
}

TEST_CASE("signature rule on two-letter windows") {
    const PerfectCrystalSpec& spec = b13();

    // ground window of weight (3,0), leftmost letter first: (g2, g1) = (0, 3)
    std::vector<int> ground30 = {0, 3};
    CHECK(!word_f_action(spec, 1, ground30).has_value());
    CHECK(!word_e_action(spec, 1, ground30).has_value());
    auto f0 = word_f_action(spec, 0, ground30);
    REQUIRE(f0.has_value());
    CHECK(f0->index == 1);  // acts on the letter at position 1 (the right end)
    CHECK(f0->letter_after == 2);
    auto e0 = word_e_action(spec, 0, ground30);
    REQUIRE(e0.has_value());
    CHECK(e0->index == 0);
    CHECK(e0->letter_after == 1);

    // ground window of weight (2,1): (g2, g1) = (1, 2)
    std::vector<int> ground21 = {1, 2};
    auto f1 = word_f_action(spec, 1, ground21);
    REQUIRE(f1.has_value());
    CHECK(f1->index == 1);
    CHECK(f1->letter_after == 3);
    auto e1 = word_e_action(spec, 1, ground21);
    REQUIRE(e1.has_value());
    CHECK(e1->index == 0);
    CHECK(e1->letter_after == 0);
    auto f0b = word_f_action(spec, 0, ground21);
    REQUIRE(f0b.has_value());
    CHECK(f0b->index == 1);
    CHECK(f0b->letter_after == 1);
    auto e0b = word_e_action(spec, 0, ground21);
    REQUIRE(e0b.has_value());
    CHECK(e0b->index == 0);
    CHECK(e0b->letter_after == 2);
}

TEST_CASE("string lengths drive repeated application") {
    const PerfectCrystalSpec& spec = b13();
    for (int color = 0; color < 2; ++color)
        for (int k = 0; k < 4; ++k) {
            std::vector<int> word = {k};
            int steps = 0;
            while (auto next = apply_f(spec, color, word)) {
                word = *next;
                ++steps;
            }
            CHECK(steps == spec.phi_at(color, k));
            word = {k};
            steps = 0;
            while (auto next = apply_e(spec, color, word)) {
                word = *next;
                ++steps;
            }
            CHECK(steps == spec.eps_at(color, k));
        }
}

TEST_CASE("lowering and raising are mutually inverse on random words") {
    const PerfectCrystalSpec& spec = b13();
    std::mt19937 rng(20251113);
    std::uniform_int_distribution<int> letter(0, 3);
    std::uniform_int_distribution<int> length(1, 6);
    for (int t = 0; t < 500; ++t) {
        std::vector<int> word(static_cast<size_t>(length(rng)));
        for (int& w : word) w = letter(rng);
        for (int color = 0; color < 2; ++color) {
            auto lowered = apply_f(spec, color, word);
            if (lowered.has_value()) {
                auto back = apply_e(spec, color, *lowered);
                REQUIRE(back.has_value());
                CHECK(*back == word);
            }
            auto raised = apply_e(spec, color, word);
            if (raised.has_value()) {
                auto back = apply_f(spec, color, *raised);
                REQUIRE(back.has_value());
                CHECK(*back == word);
            }
        }
    }
}

TEST_CASE("tensor weights add up under the signature rule") {
    // phi - eps summed over a word equals the word's weight pairing, so the
    // total number of f-steps available in color i on word w^n grows linearly
    const PerfectCrystalSpec& spec = b13();
    std::vector<int> word = {2, 1, 3, 0};
    for (int color = 0; color < 2; ++color) {
        int fsteps = 0;
        std::vector<int> w = word;
        while (auto nxt = apply_f(spec, color, w)) {
            w = *nxt;
            ++fsteps;
        }
        int esteps = 0;
        w = word;
        while (auto nxt = apply_e(spec, color, w)) {
            w = *nxt;
            ++esteps;
        }
        int pairing = 0;
        for (int k : word) pairing += spec.phi_at(color, k) - spec.eps_at(color, k);
        CHECK(fsteps - esteps == pairing);
    }
}
