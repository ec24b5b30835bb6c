#include "qcrystal/paths.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <tuple>

namespace qcrystal {

namespace {

bool weight_has_mod_length(const DominantWeight& w) {
    return (w.l0 == 3 && w.l1 == 0) || (w.l0 == 2 && w.l1 == 1);
}

}  // namespace

LambdaPath make_path(const GroundState& gs, std::vector<int> deviations) {
    while (!deviations.empty() &&
           deviations.back() == gs.at(static_cast<int>(deviations.size())))
        deviations.pop_back();
    return LambdaPath{std::move(deviations)};
}

int path_at(const GroundState& gs, const LambdaPath& path, int k) {
    if (k <= static_cast<int>(path.deviations.size()))
        return path.deviations[static_cast<size_t>(k - 1)];
    return gs.at(k);
}

PathStats path_stats(const PerfectCrystalSpec& spec, const GroundState& gs, const LambdaPath& path) {
    int L = static_cast<int>(path.deviations.size());
    std::int64_t h = 0, e = 0, s = 0;
    for (int k = 1; k <= L; ++k) {
        int dh = spec.energy(path_at(gs, path, k + 1), path_at(gs, path, k)) -
                 spec.energy(gs.at(k + 1), gs.at(k));
        h += dh;
        e += static_cast<std::int64_t>(k) * dh;
        s += path_at(gs, path, k) - gs.at(k);
    }
    // The weight defect decomposes over the simple roots with coefficients
    // m = e and n = e + s; both must be nonnegative integers.
    std::int64_t m = e, n = e + s;
    if (m < 0 || n < 0)
        throw NonIntegralGrading("negative simple-root coefficient in the weight defect");
    PathStats st;
    st.h_length = h;
    st.degree = m + n;
    if (weight_has_mod_length(gs.lambda)) {
        int b1 = path_at(gs, path, 1);
        st.mod_length = 2 * h - (gs.at(1) - b1);
    }
    return st;
}

std::int64_t mod_length(const PerfectCrystalSpec& spec, const GroundState& gs, const LambdaPath& path) {
    if (!weight_has_mod_length(gs.lambda))
        throw UnsupportedWeight("mod_length is defined only for weights (3,0) and (2,1)");
    return *path_stats(spec, gs, path).mod_length;
}

namespace {

struct ScanEntry {
    std::int64_t h;
    std::int64_t degree;
    std::optional<std::int64_t> mod_len;
    bool operator==(const ScanEntry& rhs) const {
        return h == rhs.h && degree == rhs.degree && mod_len == rhs.mod_len;
    }
};

using ScanMap = std::map<std::vector<int>, ScanEntry>;

struct WindowTables {
    std::vector<int> g;    // g[k] for k = 1..L+1 (index 0 unused)
    std::vector<int> hg;   // hg[k] = H(g_{k+1}, g_k)
    std::vector<std::array<std::int64_t, 4>> v;  // exact minimum of the remaining degree
};

WindowTables window_tables(const PerfectCrystalSpec& spec, const GroundState& gs, int L) {
    WindowTables t;
    t.g.assign(static_cast<size_t>(L) + 2, 0);
    t.hg.assign(static_cast<size_t>(L) + 1, 0);
    for (int k = 1; k <= L + 1; ++k) t.g[static_cast<size_t>(k)] = gs.at(k);
    for (int k = 1; k <= L; ++k) t.hg[static_cast<size_t>(k)] = spec.energy(gs.at(k + 1), gs.at(k));
    t.v.assign(static_cast<size_t>(L) + 1, {});
    for (int a = 0; a < 4; ++a)
        t.v[static_cast<size_t>(L)][static_cast<size_t>(a)] =
            2LL * L * (spec.energy(t.g[static_cast<size_t>(L) + 1], a) - t.hg[static_cast<size_t>(L)]);
    for (int k = L - 1; k >= 1; --k)
        for (int a = 0; a < 4; ++a) {
            std::int64_t best = 0;
            bool has = false;
            for (int x = 0; x < 4; ++x) {
                std::int64_t cand = 2LL * k * (spec.energy(x, a) - t.hg[static_cast<size_t>(k)]) +
                                    (x - t.g[static_cast<size_t>(k) + 1]) +
                                    t.v[static_cast<size_t>(k) + 1][static_cast<size_t>(x)];
                if (!has || cand < best) {
                    best = cand;
                    has = true;
                }
            }
            t.v[static_cast<size_t>(k)][static_cast<size_t>(a)] = best;
        }
    return t;
}

struct ShardScanner {
    const PerfectCrystalSpec& spec;
    const GroundState& gs;
    const WindowTables& t;
    int L;
    std::int64_t maxdeg;
    bool want_mod;
    std::vector<int> devs;
    ScanMap out;

    void leaf(std::int64_t pe, std::int64_t ph, std::int64_t ps, int a) {
        std::int64_t dh = spec.energy(t.g[static_cast<size_t>(L) + 1], a) - t.hg[static_cast<size_t>(L)];
        std::int64_t e = pe + static_cast<std::int64_t>(L) * dh;
        std::int64_t h = ph + dh;
        std::int64_t m = e, n = e + ps;
        if (m < 0 || n < 0)
            throw NonIntegralGrading("negative simple-root coefficient in the weight defect");
        std::int64_t deg = m + n;
        if (deg > maxdeg) return;  // restates the prune bound, which is exact at the last position
        ScanEntry entry;
        entry.h = h;
        entry.degree = deg;
        if (want_mod) entry.mod_len = 2 * h - (gs.at(1) - devs[0]);
        std::vector<int> canonical = devs;
        while (!canonical.empty() &&
               canonical.back() == gs.at(static_cast<int>(canonical.size())))
            canonical.pop_back();
        out.emplace(std::move(canonical), entry);
    }

    // Invariants at a call for position k with letter a: pe, ph, ps cover the
    // energy terms strictly below k and the letter sums up to and including k,
    // so 2*pe + ps plus the exact table minimum bounds every completion.
    void dfs(int k, int a, std::int64_t pe, std::int64_t ph, std::int64_t ps) {
        if (2 * pe + ps + t.v[static_cast<size_t>(k)][static_cast<size_t>(a)] > maxdeg) return;
        if (k == L) {
            leaf(pe, ph, ps, a);
            return;
        }
        for (int x = 0; x < 4; ++x) {
            std::int64_t dh = spec.energy(x, a) - t.hg[static_cast<size_t>(k)];
            devs.push_back(x);
            dfs(k + 1, x, pe + static_cast<std::int64_t>(k) * dh, ph + dh,
                ps + (x - t.g[static_cast<size_t>(k) + 1]));
            devs.pop_back();
        }
    }

    void run(int b1, int b2) {
        devs = {b1, b2};
        std::int64_t dh1 = spec.energy(b2, b1) - t.hg[1];
        dfs(2, b2, dh1, dh1, (b1 - t.g[1]) + (b2 - t.g[2]));
    }
};

ScanMap run_window(const PerfectCrystalSpec& spec, const GroundState& gs, int L, std::int64_t maxdeg,
                   bool want_mod, int threads) {
    WindowTables tables = window_tables(spec, gs, L);
    std::array<ScanMap, 16> shards;
    auto run_shard = [&](int s) {
        ShardScanner scanner{spec, gs, tables, L, maxdeg, want_mod, {}, {}};
        scanner.run(s / 4, s % 4);
        shards[static_cast<size_t>(s)] = std::move(scanner.out);
    };
    if (threads <= 1) {
        for (int s = 0; s < 16; ++s) run_shard(s);
    } else {
        std::vector<std::future<void>> pending;
        for (int s = 0; s < 16; ++s) {
            pending.push_back(std::async(std::launch::async, run_shard, s));
            if (static_cast<int>(pending.size()) == threads) {
                for (auto& f : pending) f.get();
                pending.clear();
            }
        }
        for (auto& f : pending) f.get();
    }
    ScanMap merged;
    for (auto& shard : shards)  // shard key sets are disjoint by construction
        merged.insert(shard.begin(), shard.end());
    return merged;
}

struct ScanResult {
    ScanMap paths;
    int window;
};

// Grow the deviation window two positions at a time until three consecutive
// runs return the same path set; the set is then complete below the cap.
ScanResult scan_paths(const PerfectCrystalSpec& spec, const GroundState& gs, int trunc, int threads) {
    if (gs.period() != 2)
        throw std::invalid_argument("path enumeration expects a period-2 ground state");
    std::int64_t maxdeg = trunc - 1;
    bool want_mod = weight_has_mod_length(gs.lambda);
    std::vector<ScanMap> history;
    for (int L = 2; L <= 4 * trunc + 64; L += 2) {
        history.push_back(run_window(spec, gs, L, maxdeg, want_mod, threads));
        size_t n = history.size();
        if (n >= 3 && history[n - 1] == history[n - 2] && history[n - 2] == history[n - 3])
            return ScanResult{std::move(history[n - 1]), L - 4};
        if (n >= 3) history.erase(history.begin());
    }
    throw NonTerminating("path enumeration window failed to stabilize");
}

}  // namespace

std::vector<std::pair<LambdaPath, PathStats>> enumerate_paths(const PerfectCrystalSpec& spec,
                                                              const GroundState& gs, int trunc) {
    ScanResult scan = scan_paths(spec, gs, trunc, 1);
    std::vector<std::pair<LambdaPath, PathStats>> out;
    out.reserve(scan.paths.size());
    for (const auto& [devs, entry] : scan.paths) {
        PathStats st;
        st.h_length = entry.h;
        st.degree = entry.degree;
        st.mod_length = entry.mod_len;
        out.emplace_back(LambdaPath{devs}, st);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second.degree != b.second.degree) return a.second.degree < b.second.degree;
        return a.first.deviations < b.first.deviations;
    });
    return out;
}

PathSeriesBundle path_series_bundle(const PerfectCrystalSpec& spec, const GroundState& gs, int trunc,
                                    int threads) {
    ScanResult scan = scan_paths(spec, gs, trunc, threads);
    PathSeriesBundle bundle{trunc,
                            XLaurentSeries(trunc),
                            std::vector<XLaurentSeries>(16, XLaurentSeries(trunc)),
                            {},
                            scan.window,
                            0};
    bool want_mod = weight_has_mod_length(gs.lambda);
    std::map<int, std::map<int, Coeff>> total;
    std::vector<std::map<int, std::map<int, Coeff>>> by_start(16);
    bool first = true;
    for (const auto& [devs, entry] : scan.paths) {
        bundle.h_histogram[{entry.h, entry.degree}] += 1;
        if (!want_mod) continue;
        int ml = static_cast<int>(*entry.mod_len);
        int deg = static_cast<int>(entry.degree);
        LambdaPath p{devs};
        int start = 4 * path_at(gs, p, 1) + path_at(gs, p, 2);
        total[ml][deg] += 1;
        by_start[static_cast<size_t>(start)][ml][deg] += 1;
        if (first || ml < bundle.min_x_degree) bundle.min_x_degree = ml;
        first = false;
    }
    auto assemble = [trunc](const std::map<int, std::map<int, Coeff>>& m) {
        XLaurentSeries s(trunc);
        for (const auto& [xe, col] : m) {
            QSeries part(trunc);
            for (const auto& [qe, c] : col) part.set_coeff(qe, c);
            s.set_x_part(xe, part);
        }
        return s;
    };
    if (want_mod) {
        bundle.total = assemble(total);
        for (int s = 0; s < 16; ++s) bundle.by_start[static_cast<size_t>(s)] = assemble(by_start[static_cast<size_t>(s)]);
    }
    return bundle;
}

XLaurentSeries gf_J(const PerfectCrystalSpec& spec, const GroundState& gs, int trunc, int threads) {
    if (!weight_has_mod_length(gs.lambda))
        throw UnsupportedWeight("gf_J needs the modified length, defined for weights (3,0) and (2,1)");
    return path_series_bundle(spec, gs, trunc, threads).total;
}

XLaurentSeries gf_J_prefix(const PerfectCrystalSpec& spec, const GroundState& gs, int p1, int p2,
                           int trunc, int threads) {
    if (!weight_has_mod_length(gs.lambda))
        throw UnsupportedWeight("gf_J_prefix needs the modified length, defined for weights (3,0) and (2,1)");
    return path_series_bundle(spec, gs, trunc, threads).by_start[static_cast<size_t>(4 * p1 + p2)];
}

XLaurentSeries gf_FD(const PerfectCrystalSpec& spec, const GroundState& gs, int divisor, int trunc,
                     int threads) {
    int full = gs.period() * spec.ht_delta;
    if (divisor < 1 || full % divisor != 0)
        throw InvalidDivisor("divisor must divide the period times the null-root height");
    PathSeriesBundle bundle = path_series_bundle(spec, gs, trunc, threads);
    XLaurentSeries s(trunc);
    std::map<int, QSeries> parts;
    for (const auto& [key, count] : bundle.h_histogram) {
        int xe = static_cast<int>(key.first) * divisor;
        int qe = static_cast<int>(key.second);
        auto it = parts.find(xe);
        if (it == parts.end()) it = parts.emplace(xe, QSeries(trunc)).first;
        it->second.set_coeff(qe, it->second.coeff(qe) + count);
    }
    for (const auto& [xe, part] : parts) s.set_x_part(xe, part);
    return s;
}

namespace {

struct WindowOutcome {
    enum Kind { kNone, kAct } kind;
    int pos;
    int letter;
    bool at_top;
};

std::optional<LambdaPath> path_op(const PerfectCrystalSpec& spec, const GroundState& gs,
                                  const LambdaPath& path, int color, bool lowering) {
    int L = static_cast<int>(path.deviations.size());
    int period = gs.period();
    int base = ((std::max(L, period) + period - 1) / period) * period;
    std::vector<WindowOutcome> history;
    for (int p = 1; p <= 300; ++p) {
        int M = base + period * p;
        std::vector<int> word(static_cast<size_t>(M));
        for (int k = 1; k <= M; ++k) word[static_cast<size_t>(M - k)] = path_at(gs, path, k);
        auto act = lowering ? word_f_action(spec, color, word) : word_e_action(spec, color, word);
        WindowOutcome o{};
        if (!act.has_value()) {
            o.kind = WindowOutcome::kNone;
        } else {
            o.kind = WindowOutcome::kAct;
            o.pos = M - act->index;
            o.letter = act->letter_after;
            o.at_top = act->index == 0;
        }
        history.push_back(o);
        if (history.size() < 3) continue;
        const WindowOutcome& a = history[history.size() - 3];
        const WindowOutcome& b = history[history.size() - 2];
        const WindowOutcome& c = history[history.size() - 1];
        if (a.kind == WindowOutcome::kNone && b.kind == WindowOutcome::kNone &&
            c.kind == WindowOutcome::kNone)
            return std::nullopt;
        if (a.kind == WindowOutcome::kAct && b.kind == WindowOutcome::kAct &&
            c.kind == WindowOutcome::kAct) {
            // A sign that only ever survives at the window top belongs to no
            // finite position: the operator is undefined on the path.
            if (a.at_top && b.at_top && c.at_top) return std::nullopt;
            if (!a.at_top && !b.at_top && !c.at_top && a.pos == b.pos && b.pos == c.pos &&
                a.letter == b.letter && b.letter == c.letter) {
                int len = std::max(L, a.pos);
                std::vector<int> devs(static_cast<size_t>(len));
                for (int k = 1; k <= len; ++k) devs[static_cast<size_t>(k - 1)] = path_at(gs, path, k);
                devs[static_cast<size_t>(a.pos - 1)] = a.letter;
                return make_path(gs, std::move(devs));
            }
        }
    }
    throw NonTerminating("path operator window failed to stabilize");
}

}  // namespace

std::optional<LambdaPath> path_f(const PerfectCrystalSpec& spec, const GroundState& gs,
                                 const LambdaPath& path, int color) {
    return path_op(spec, gs, path, color, true);
}

std::optional<LambdaPath> path_e(const PerfectCrystalSpec& spec, const GroundState& gs,
                                 const LambdaPath& path, int color) {
    return path_op(spec, gs, path, color, false);
}

std::vector<std::vector<LambdaPath>> bfs_levels(const PerfectCrystalSpec& spec, const GroundState& gs,
                                                int max_degree) {
    std::vector<std::vector<LambdaPath>> levels;
    LambdaPath ground = make_path(gs, {});
    if (path_stats(spec, gs, ground).degree != 0)
        throw std::logic_error("ground-state path must have degree 0");
    levels.push_back({ground});
    for (int n = 0; n < max_degree; ++n) {
        std::set<LambdaPath> next;
        for (const LambdaPath& p : levels.back())
            for (int color = 0; color < 2; ++color) {
                auto r = path_f(spec, gs, p, color);
                if (r.has_value()) next.insert(*r);
            }
        for (const LambdaPath& p : next)
            if (path_stats(spec, gs, p).degree != n + 1)
                throw std::logic_error("lowering operator changed the degree by a value other than 1");
        levels.emplace_back(next.begin(), next.end());
    }
    return levels;
}

}  // namespace qcrystal
