#pragma once

#include <vector>

#include "qcrystal/report.hpp"
#include "qcrystal/series.hpp"

namespace qcrystal {

// Entries 0..n_max of the two-term table: b_0 = 1, b_1 = q or 0 (variant 1
// or 2), b_{n+2} = q^{n+2} b_n - q^{n+1} b_{n+1}.
std::vector<QPolynomial> b_table(int i, int n_max);

// Entries 0..n_max of the four-term table: c_0 = 1, c_1 = q^i + q^3, and the
// depth-4 recurrence whose trailing factors (1 - q^{3n}), (1 - q^{3n-3})
// vanish at small n, so entries below index 0 never contribute.
std::vector<QPolynomial> c_table(int i, int n_max);

// Sum over n of table entry times 1/(q^m; q^m)_n with m = 1 for family 'b'
// and m = 3 for family 'c', mod q^trunc.  Terms are added until the trailing
// depth-many entries all have minimum degree >= trunc, which bounds every
// later entry; NonTerminating guards the loop.
QSeries theorem_sum(char family, int i, int trunc);

// The matching infinite products.
QSeries theorem_product(char family, int i, int trunc);

Report verify_theorem(char family, int i, int trunc);

// Value-at-1 and sign structure of a table family, both variants:
// family 'b': entries alternate in sign as (-1)^{n+i} past index 2 and their
// absolute values at q=1 follow the two-term addition rule with seeds 1, 1;
// family 'c': values at q=1 double at each index, and coefficient
// nonnegativity is reported (not asserted) through index 12.
Report specializations(char family, int n_max);

}  // namespace qcrystal
