#include "qcrystal/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "qcrystal/crystal.hpp"
#include "qcrystal/partitions.hpp"
#include "qcrystal/paths.hpp"
#include "qcrystal/recurrences.hpp"
#include "qcrystal/transfer.hpp"

namespace qcrystal {
namespace {

// For every pair of two-letter prefixes, prepending the outer prefix to a
// random path starting with the inner prefix must shift the modified length
// by f and the degree by g plus twice the old modified length, with (f, g)
// from f_g_prime.  The energy-length variant of the same law (shift of
// h_length constant, degree shift constant after removing four times the old
// h_length) is checked at both supported weights.
Report run_fg_law(int samples, int threads) {
    (void)threads;
    samples = std::max(1, samples);
    Report r;
    r.identity = "fg_law";
    r.pass = true;
    const PerfectCrystalSpec& spec = b13();
    const GroundState gs30 = ground_state(spec, DominantWeight{3, 0});
    const GroundState gs21 = ground_state(spec, DominantWeight{2, 1});
    std::mt19937 rng(20260816u);
    std::uniform_int_distribution<int> letter(0, 3);
    std::uniform_int_distribution<int> tail_len(0, 8);
    long long checked = 0;
    for (int q1 = 0; q1 < 4 && r.pass; ++q1)
        for (int q2 = 0; q2 < 4 && r.pass; ++q2)
            for (int p1 = 0; p1 < 4 && r.pass; ++p1)
                for (int p2 = 0; p2 < 4 && r.pass; ++p2) {
                    std::pair<int, int> fg = f_g_prime({q1, q2}, {p1, p2});
                    std::optional<std::int64_t> dh_const[2], dd_const[2];
                    for (int rep = 0; rep < samples && r.pass; ++rep) {
                        std::vector<int> devs = {q1, q2};
                        int len = tail_len(rng);
                        for (int t = 0; t < len; ++t) devs.push_back(letter(rng));
                        for (int w = 0; w < 2 && r.pass; ++w) {
                            const GroundState& gs = (w == 0) ? gs30 : gs21;
                            LambdaPath inner = make_path(gs, devs);
                            std::vector<int> outer_devs = {p1, p2};
                            outer_devs.insert(outer_devs.end(), inner.deviations.begin(),
                                              inner.deviations.end());
                            LambdaPath outer = make_path(gs, outer_devs);
                            PathStats si = path_stats(spec, gs, inner);
                            PathStats so = path_stats(spec, gs, outer);
                            std::ostringstream tag;
                            tag << "prefixes (" << q1 << q2 << ") <- (" << p1 << p2
                                << "), weight " << (w == 0 ? "(3,0)" : "(2,1)");
                            if (w == 0) {
                                std::int64_t dl = *so.mod_length - *si.mod_length;
                                std::int64_t dd = so.degree - si.degree - 2 * *si.mod_length;
                                if (dl != fg.first || dd != fg.second) {
                                    r.pass = false;
                                    r.notes.push_back("shift law broken at " + tag.str());
                                }
                            }
                            std::int64_t dh = so.h_length - si.h_length;
                            std::int64_t dd4 = so.degree - si.degree - 4 * si.h_length;
                            if (!dh_const[w].has_value()) {
                                dh_const[w] = dh;
                                dd_const[w] = dd4;
                            } else if (dh != *dh_const[w] || dd4 != *dd_const[w]) {
                                r.pass = false;
                                r.notes.push_back("energy-variant shift not constant at " +
                                                  tag.str());
                            }
                            ++checked;
                        }
                    }
                }
    if (r.pass)
        r.notes.push_back("all 256 prefix pairs, " + std::to_string(samples) +
                          " random paths each (" + std::to_string(checked) + " checks)");
    return r;
}

// Closure of the ground-state path under the two lowering operators must
// list, degree by degree, exactly the paths the pruned enumeration finds;
// separately the x-degree-1 slice of the path series is the single geometric
// series q/(1 - q).
Report run_character_oracle(int depth, int threads) {
    depth = std::max(0, depth);
    Report r;
    r.identity = "character_oracle";
    r.pass = true;
    const PerfectCrystalSpec& spec = b13();
    const GroundState gs = ground_state(spec, DominantWeight{3, 0});
    std::vector<std::vector<LambdaPath>> levels = bfs_levels(spec, gs, depth);
    std::vector<std::vector<LambdaPath>> by_degree(static_cast<size_t>(depth) + 1);
    for (const auto& [path, stats] : enumerate_paths(spec, gs, depth + 1))
        by_degree[static_cast<size_t>(stats.degree)].push_back(path);
    for (auto& group : by_degree) std::sort(group.begin(), group.end());
    std::ostringstream counts;
    for (int n = 0; n <= depth; ++n) {
        const auto& a = levels[static_cast<size_t>(n)];
        const auto& b = by_degree[static_cast<size_t>(n)];
        if (a != b) {
            r.pass = false;
            r.notes.push_back("degree " + std::to_string(n) + ": operator closure lists " +
                              std::to_string(a.size()) + " paths, enumeration lists " +
                              std::to_string(b.size()) +
                              (a.size() == b.size() ? " (same count, different sets)" : ""));
        }
        counts << (n ? " " : "") << b.size();
    }
    if (r.pass) r.notes.push_back("degree counts 0.." + std::to_string(depth) + ": " + counts.str());
    const int slice_trunc = 30;
    QSeries slice = gf_J(spec, gs, slice_trunc, threads).x_part(1);
    QSeries target = QSeries::monomial(1, 1, slice_trunc) * poch(1, 1, 1, slice_trunc).inverse();
    auto mm = first_mismatch(slice, target);
    if (mm.has_value()) {
        r.pass = false;
        r.first_mismatch = mm;
        r.notes.push_back("x-degree-1 slice differs from q/(1 - q)");
    } else {
        r.notes.push_back("x-degree-1 slice equals q/(1 - q) mod q^" +
                          std::to_string(slice_trunc));
    }
    return r;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"thm1_i1", "two-term table summed with 1/(q;q)_n weights equals the mod-5 product, variant 1",
         200, [](int t, int) { return verify_theorem('b', 1, t); }},
        {"thm1_i2", "two-term table summed with 1/(q;q)_n weights equals the mod-5 product, variant 2",
         200, [](int t, int) { return verify_theorem('b', 2, t); }},
        {"thm2_i1",
         "four-term table summed with 1/(q^3;q^3)_n weights equals the mod-12 product, variant 1",
         150, [](int t, int) { return verify_theorem('c', 1, t); }},
        {"thm2_i2",
         "four-term table summed with 1/(q^3;q^3)_n weights equals the mod-12 product, variant 2",
         150, [](int t, int) { return verify_theorem('c', 2, t); }},
        {"qdif", "three-term functional equation for the weight (3,0) path series", 30,
         [](int t, int th) { return verify_qdif(t, th); }},
        {"qdif2",
         "functional equation and x-degree recurrence for the path series divided by prod(1+xq^j)",
         30, [](int t, int th) { return verify_qdif2(t, th); }},
        {"qd2_i1", "three-term functional equation for the distinct-part series, variant 1", 40,
         [](int t, int) { return verify_qd2(1, t); }},
        {"qd2_i2", "three-term functional equation for the distinct-part series, variant 2", 40,
         [](int t, int) { return verify_qd2(2, t); }},
        {"euler", "distinct-part partitions counted by size equal the odd-part product", 80,
         [](int t, int) { return euler_verify(t); }},
        {"wakimoto_i1",
         "distinct-part partitions counted by residue weight equal the mod-12 product, variant 1",
         60, [](int t, int) { return wakimoto_verify(1, t); }},
        {"wakimoto_i2",
         "distinct-part partitions counted by residue weight equal the mod-12 product, variant 2",
         60, [](int t, int) { return wakimoto_verify(2, t); }},
        {"transfer16", "sixteen two-letter-prefix refinement equations for the path series", 30,
         [](int t, int th) { return verify_transfer(t, th); }},
        {"gsystem_i1", "eight restriction equations for the distinct-part series, variant 1", 30,
         [](int t, int) { return verify_G_system(1, t); }},
        {"gsystem_i2", "eight restriction equations for the distinct-part series, variant 2", 30,
         [](int t, int) { return verify_G_system(2, t); }},
        {"matrix_M",
         "256-cell exponent-shift table matches the embedded reference under a fixed index convention",
         0, [](int t, int th) { return verify_matrix(t, th); }},
        {"bridge_b_i1",
         "two-term table entries equal (q;q)_n times the x-degree slices of the path series "
         "quotient, variant 1",
         30, [](int t, int th) { return coefficient_bridge(1, t, th); }},
        {"bridge_b_i2",
         "two-term table entries equal (q;q)_n times the x-degree slices of the path series "
         "quotient, variant 2",
         30, [](int t, int th) { return coefficient_bridge(2, t, th); }},
        {"bridge_c_i1",
         "four-term table entries equal (q^3;q^3)_n times the x-degree slices of the "
         "distinct-part series, variant 1",
         40, [](int t, int) { return c_coefficient_bridge(1, t); }},
        {"bridge_c_i2",
         "four-term table entries equal (q^3;q^3)_n times the x-degree slices of the "
         "distinct-part series, variant 2",
         40, [](int t, int) { return c_coefficient_bridge(2, t); }},
        {"fib_special",
         "values at q=1 and sign pattern of the two-term tables through the given index", 25,
         [](int t, int) { return specializations('b', t); }},
        {"pow2_special", "values at q=1 of the four-term tables double at each index", 25,
         [](int t, int) { return specializations('c', t); }},
        {"fg_law",
         "prefix shift law for path statistics on randomized paths (truncation = samples per pair)",
         20, [](int t, int th) { return run_fg_law(t, th); }},
        {"character_oracle",
         "path enumeration against operator closure (truncation = search depth), plus the "
         "x-degree-1 slice",
         12, [](int t, int th) { return run_character_oracle(t, th); }},
    };
    return entries;
}

const CatalogEntry& find_identity(const std::string& id) {
    for (const CatalogEntry& e : catalog())
        if (e.id == id) return e;
    throw UnknownIdentity("unknown identity: " + id);
}

const std::vector<SeriesEntry>& series_catalog() {
    static const std::vector<SeriesEntry> entries = {
        {"J_3L0", "two-variable path series at weight (3,0)", 12,
         [](int t, int th) { return gf_J(b13(), ground_state(b13(), {3, 0}), t, th); }},
        {"K_3L0", "path series at weight (3,0) divided by prod(1+xq^j)", 12,
         [](int t, int th) {
             return gf_J(b13(), ground_state(b13(), {3, 0}), t, th) * x_poch_plus(1, 1, t).inverse();
         }},
        {"J_2L0L1", "two-variable path series at weight (2,1)", 12,
         [](int t, int th) { return gf_J(b13(), ground_state(b13(), {2, 1}), t, th); }},
        {"F1", "distinct-part partitions by length and residue weight, variant 1", 12,
         [](int t, int) { return gf_F(1, t); }},
        {"F2", "distinct-part partitions by length and residue weight, variant 2", 12,
         [](int t, int) { return gf_F(2, t); }},
        {"FD:1", "weight (3,0) paths graded by energy length, x-exponent multiplier 1", 12,
         [](int t, int th) { return gf_FD(b13(), ground_state(b13(), {3, 0}), 1, t, th); }},
        {"FD:2", "weight (3,0) paths graded by energy length, x-exponent multiplier 2", 12,
         [](int t, int th) { return gf_FD(b13(), ground_state(b13(), {3, 0}), 2, t, th); }},
        {"FD:4", "weight (3,0) paths graded by energy length, x-exponent multiplier 4", 12,
         [](int t, int th) { return gf_FD(b13(), ground_state(b13(), {3, 0}), 4, t, th); }},
        {"rr_product:1", "infinite product with factors 1, 4 mod 5", 12,
         [](int t, int) { return XLaurentSeries::from_q(theorem_product('b', 1, t)); }},
        {"rr_product:2", "infinite product with factors 2, 3 mod 5", 12,
         [](int t, int) { return XLaurentSeries::from_q(theorem_product('b', 2, t)); }},
        {"cap_product:1", "infinite product paired with the four-term table, variant 1", 12,
         [](int t, int) { return XLaurentSeries::from_q(theorem_product('c', 1, t)); }},
        {"cap_product:2", "infinite product paired with the four-term table, variant 2", 12,
         [](int t, int) { return XLaurentSeries::from_q(theorem_product('c', 2, t)); }},
    };
    return entries;
}

const SeriesEntry& find_series(const std::string& id) {
    for (const SeriesEntry& e : series_catalog())
        if (e.id == id) return e;
    throw UnknownSeries("unknown series: " + id);
}

}  // namespace qcrystal
