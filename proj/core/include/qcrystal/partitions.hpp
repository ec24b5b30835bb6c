#pragma once

#include <vector>

#include "qcrystal/report.hpp"
#include "qcrystal/series.hpp"

namespace qcrystal {

// Partition into distinct parts, listed in decreasing order; row j (1-based,
// from the largest part) contributes boxes (j, 1..parts[j-1]).
struct StrictPartition {
    std::vector<int> parts;
    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool has_part(int p) const;
    // size plus the number of boxes (j, k) with k - j congruent to i mod 2.
    int residue_weight(int i) const;
};

std::vector<StrictPartition> strict_partitions_up_to(int max_size);

// Count by size against 1/prod(1 - q^odd).
Report euler_verify(int trunc);
// Count by residue weight against the two known products.
Report wakimoto_verify(int i, int trunc);

// x^length q^{residue weight}.
XLaurentSeries gf_F(int i, int trunc);
// Restriction by length parity u, presence t of part 2, presence s of part 1.
XLaurentSeries gf_G(int i, int u, int t, int s, int trunc);

// Weight of the boxes removed when parts 1 and 2 are deleted: part 2 always
// carries 3 (one box of each residue class, one doubled) and part 1 carries
// 1 or 2 depending on whether its box residue is the doubled class.
int removed_weight(int i, int u, int t, int s);

// All eight restriction equations G^{(u)}_{t,s}(x, q) = x^{s+t}
// q^{removed} sum_{t', s'} G^{(u+s+t)}_{t', s'}(x q^3, q), plus falsification
// of four deliberately perturbed variants.
Report verify_G_system(int i, int trunc);

// Three-term functional equation for the full two-variable series.
Report verify_qd2(int i, int trunc);

// Four-term table entry equals the finite product times the x-degree
// coefficient of the series, for every index visible below the truncation.
Report c_coefficient_bridge(int i, int trunc);

}  // namespace qcrystal
