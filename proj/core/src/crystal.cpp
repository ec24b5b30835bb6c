#include "qcrystal/crystal.hpp"

#include <algorithm>

namespace qcrystal {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("crystal data: " + what);
}

}  // namespace

int PerfectCrystalSpec::energy(int a, int b) const {
    auto it = energy_table.find({a, b});
    check(it != energy_table.end(), "missing energy entry");
    return it->second;
}

int PerfectCrystalSpec::eps_at(int color, int b) const {
    auto it = eps[static_cast<size_t>(color)].find(b);
    check(it != eps[static_cast<size_t>(color)].end(), "missing eps entry");
    return it->second;
}

int PerfectCrystalSpec::phi_at(int color, int b) const {
    auto it = phi[static_cast<size_t>(color)].find(b);
    check(it != phi[static_cast<size_t>(color)].end(), "missing phi entry");
    return it->second;
}

const PerfectCrystalSpec& b13() {
    static const PerfectCrystalSpec spec = [] {
        PerfectCrystalSpec s;
        s.name = "b13";
        s.elements = {0, 1, 2, 3};
        for (int k = 0; k <= 3; ++k) {
            if (k < 3) s.f_arrow[1][k] = k + 1;
            if (k > 0) s.f_arrow[0][k] = k - 1;
            if (k > 0) s.e_arrow[1][k] = k - 1;
            if (k < 3) s.e_arrow[0][k] = k + 1;
            s.eps[1][k] = k;
            s.phi[1][k] = 3 - k;
            s.eps[0][k] = 3 - k;
            s.phi[0][k] = k;
            s.classical_weight[k] = {2 * k - 3, 3 - 2 * k};
        }
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) s.energy_table[{a, b}] = std::max(a - 3, -b);
        s.level = 3;
        s.ht_delta = 2;
        s.marks = {1, 1};
        s.comarks = {1, 1};
        validate_crystal(s);
        return s;
    }();
    return spec;
}

void validate_crystal(const PerfectCrystalSpec& spec) {
    for (int color = 0; color < 2; ++color) {
        const auto& f = spec.f_arrow[static_cast<size_t>(color)];
        const auto& e = spec.e_arrow[static_cast<size_t>(color)];
        for (const auto& [b, fb] : f) {
            auto it = e.find(fb);
            check(it != e.end() && it->second == b, "f and e arrows are not mutually inverse");
        }
        for (const auto& [b, eb] : e) {
            auto it = f.find(eb);
            check(it != f.end() && it->second == b, "e and f arrows are not mutually inverse");
        }
        for (int b : spec.elements) {
            // String counts are the lengths of the arrow strings through b.
            int up = 0, cur = b;
            while (e.count(cur)) {
                cur = e.at(cur);
                ++up;
                check(up <= static_cast<int>(spec.elements.size()), "e string does not terminate");
            }
            check(up == spec.eps_at(color, b), "eps differs from the e-string length");
            int down = 0;
            cur = b;
            while (f.count(cur)) {
                cur = f.at(cur);
                ++down;
                check(down <= static_cast<int>(spec.elements.size()), "f string does not terminate");
            }
            check(down == spec.phi_at(color, b), "phi differs from the f-string length");
        }
    }
    for (int b : spec.elements) {
        const auto& wt = spec.classical_weight.at(b);
        for (int color = 0; color < 2; ++color)
            check(spec.phi_at(color, b) - spec.eps_at(color, b) == wt[static_cast<size_t>(color)],
                  "phi - eps does not match the weight coefficient");
    }
    int min_level = -1;
    for (int b : spec.elements) {
        int lv = spec.comarks[0] * spec.eps_at(0, b) + spec.comarks[1] * spec.eps_at(1, b);
        if (min_level < 0 || lv < min_level) min_level = lv;
    }
    check(min_level == spec.level, "stated level is not the minimum of <c, eps(b)>");

    // Energy rule on all two-letter words (a at the left position, b at the
    // right): a color-1 raising move leaves H unchanged; a color-0 raising
    // move raises H by 1 when it acts on the left factor and lowers it by 1
    // when it acts on the right factor.
    for (int a : spec.elements)
        for (int b : spec.elements) {
            for (int color = 0; color < 2; ++color) {
                auto act = word_e_action(spec, color, {a, b});
                if (!act.has_value()) continue;
                int a2 = act->index == 0 ? act->letter_after : a;
                int b2 = act->index == 1 ? act->letter_after : b;
                int dh = spec.energy(a2, b2) - spec.energy(a, b);
                int expected = color == 1 ? 0 : (act->index == 0 ? 1 : -1);
                check(dh == expected, "energy change under raising violates the pair rule");
            }
        }
}

GroundState ground_state(const PerfectCrystalSpec& spec, DominantWeight lambda) {
    auto solve_phi = [&spec](std::array<int, 2> target) -> std::optional<int> {
        for (int b : spec.elements)
            if (spec.phi_at(0, b) == target[0] && spec.phi_at(1, b) == target[1]) return b;
        return std::nullopt;
    };
    auto first = solve_phi({lambda.l0, lambda.l1});
    if (!first.has_value())
        throw NoGroundElement("no element with phi = (" + std::to_string(lambda.l0) + ", " +
                              std::to_string(lambda.l1) + ")");
    std::vector<int> elems = {*first};
    for (;;) {
        int last = elems.back();
        auto next = solve_phi({spec.eps_at(0, last), spec.eps_at(1, last)});
        if (!next.has_value())
            throw NoGroundElement("ground sequence leaves the crystal");
        if (*next == elems.front()) break;
        elems.push_back(*next);
        check(elems.size() <= spec.elements.size(), "ground sequence fails to close up");
    }
    GroundState gs{lambda, elems};
    // One more lap confirms the sequence really is periodic.
    for (int k = 1; k <= gs.period(); ++k) {
        int cur = gs.at(k);
        auto next = solve_phi({spec.eps_at(0, cur), spec.eps_at(1, cur)});
        check(next.has_value() && *next == gs.at(k + 1), "ground sequence is not periodic");
    }
    return gs;
}

namespace {

std::optional<WordAction> signature_action(const PerfectCrystalSpec& spec, int color,
                                           const std::vector<int>& word, bool lowering) {
    // Scan left to right, cancelling each minus against the nearest
    // unmatched plus to its left.
    std::vector<int> plus_owner;   // surviving pluses, in word order
    std::vector<int> minus_owner;  // surviving minuses, in word order
    for (int idx = 0; idx < static_cast<int>(word.size()); ++idx) {
        int b = word[static_cast<size_t>(idx)];
        for (int k = 0; k < spec.eps_at(color, b); ++k) {
            if (!plus_owner.empty())
                plus_owner.pop_back();
            else
                minus_owner.push_back(idx);
        }
        for (int k = 0; k < spec.phi_at(color, b); ++k) plus_owner.push_back(idx);
    }
    if (lowering) {
        if (plus_owner.empty()) return std::nullopt;
        int idx = plus_owner.front();
        return WordAction{idx, spec.f_arrow[static_cast<size_t>(color)].at(word[static_cast<size_t>(idx)])};
    }
    if (minus_owner.empty()) return std::nullopt;
    int idx = minus_owner.back();
    return WordAction{idx, spec.e_arrow[static_cast<size_t>(color)].at(word[static_cast<size_t>(idx)])};
}

}  // namespace

std::optional<WordAction> word_f_action(const PerfectCrystalSpec& spec, int color,
                                        const std::vector<int>& word) {
    return signature_action(spec, color, word, true);
}

std::optional<WordAction> word_e_action(const PerfectCrystalSpec& spec, int color,
                                        const std::vector<int>& word) {
    return signature_action(spec, color, word, false);
}

std::optional<std::vector<int>> apply_f(const PerfectCrystalSpec& spec, int color,
                                        const std::vector<int>& word) {
    auto act = word_f_action(spec, color, word);
    if (!act.has_value()) return std::nullopt;
    std::vector<int> out = word;
    out[static_cast<size_t>(act->index)] = act->letter_after;
    return out;
}

std::optional<std::vector<int>> apply_e(const PerfectCrystalSpec& spec, int color,
                                        const std::vector<int>& word) {
    auto act = word_e_action(spec, color, word);
    if (!act.has_value()) return std::nullopt;
    std::vector<int> out = word;
    out[static_cast<size_t>(act->index)] = act->letter_after;
    return out;
}

}  // namespace qcrystal
