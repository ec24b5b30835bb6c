#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcrystal {

struct NoGroundElement : std::runtime_error {
    explicit NoGroundElement(const std::string& msg) : std::runtime_error(msg) {}
};

// Coefficients of a weight in the basis of the two fundamental weights.
struct DominantWeight {
    int l0;
    int l1;
    bool operator==(const DominantWeight& rhs) const { return l0 == rhs.l0 && l1 == rhs.l1; }
};

// Data-driven description of a finite crystal with two colors (0 and 1),
// string counts, classical weights, and a pair energy function.  Everything
// is explicit tables so further crystals can be added without code changes.
struct PerfectCrystalSpec {
    std::string name;
    std::vector<int> elements;
    std::array<std::map<int, int>, 2> f_arrow;  // color -> partial map b -> f_i(b)
    std::array<std::map<int, int>, 2> e_arrow;  // color -> partial map b -> e_i(b)
    std::array<std::map<int, int>, 2> eps;      // color -> b -> eps_i(b)
    std::array<std::map<int, int>, 2> phi;      // color -> b -> phi_i(b)
    std::map<int, std::array<int, 2>> classical_weight;  // b -> fundamental-weight coefficients
    std::map<std::pair<int, int>, int> energy_table;     // (a, b) -> H(a, b)
    int level;
    int ht_delta;                 // height of the null root
    std::array<int, 2> marks;     // a_0, a_1
    std::array<int, 2> comarks;   // dual marks

    int energy(int a, int b) const;
    int eps_at(int color, int b) const;
    int phi_at(int color, int b) const;
};

// The level-3 crystal on elements {0,1,2,3} used throughout this project.
const PerfectCrystalSpec& b13();

// Exhaustive structural checks: arrows mutually inverse, string counts match
// arrows, phi - eps equals the weight pairing, the stated level is the
// minimum of <c, eps(b)>, and the energy changes under the color-0/1 raising
// operators follow the standard rule on all two-letter words.
void validate_crystal(const PerfectCrystalSpec& spec);

// Repeating sequence of crystal elements g_1, g_2, ... determined by a
// dominant weight of the right level: phi(g_1) = lambda and
// phi(g_{k+1}) = eps(g_k).  elems stores one period.
struct GroundState {
    DominantWeight lambda;
    std::vector<int> elems;
    int period() const { return static_cast<int>(elems.size()); }
    int at(int k) const {  // k >= 1
        return elems[static_cast<size_t>((k - 1) % period())];
    }
};

// Throws NoGroundElement when no element solves phi(b) = lambda (in
// particular whenever the level of lambda differs from the crystal level).
GroundState ground_state(const PerfectCrystalSpec& spec, DominantWeight lambda);

// Outcome of a raising/lowering operator on a finite word.  Words list
// elements by descending tensor position: word[0] is the leftmost factor.
struct WordAction {
    int index;         // position in the word vector that changed
    int letter_after;  // new element at that position
};

// Signature rule: each letter contributes eps_i minuses then phi_i pluses,
// adjacent "+-" pairs cancel, f acts at the owner of the leftmost surviving
// plus and e at the owner of the rightmost surviving minus.
std::optional<WordAction> word_f_action(const PerfectCrystalSpec& spec, int color,
                                        const std::vector<int>& word);
std::optional<WordAction> word_e_action(const PerfectCrystalSpec& spec, int color,
                                        const std::vector<int>& word);

std::optional<std::vector<int>> apply_f(const PerfectCrystalSpec& spec, int color,
                                        const std::vector<int>& word);
std::optional<std::vector<int>> apply_e(const PerfectCrystalSpec& spec, int color,
                                        const std::vector<int>& word);

}  // namespace qcrystal
