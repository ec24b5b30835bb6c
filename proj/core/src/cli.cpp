#include "qcrystal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "qcrystal/catalog.hpp"
#include "qcrystal/recurrences.hpp"
#include "qcrystal/report.hpp"
#include "qcrystal/series.hpp"

namespace qcrystal {
namespace {

std::string joined_ids(const std::vector<CatalogEntry>& entries) {
    std::ostringstream out;
    for (size_t k = 0; k < entries.size(); ++k) out << (k ? ", " : "") << entries[k].id;
    return out.str();
}

std::string joined_series_ids(const std::vector<SeriesEntry>& entries) {
    std::ostringstream out;
    for (size_t k = 0; k < entries.size(); ++k) out << (k ? ", " : "") << entries[k].id;
    return out.str();
}

int cmd_verify(const std::string& id, int trunc, int threads, bool json, std::ostream& out) {
    const CatalogEntry& entry = find_identity(id);
    Report r = entry.run(trunc > 0 ? trunc : entry.default_trunc, threads);
    if (json)
        out << report_json(r).dump(2) << "\n";
    else
        out << format_text(r);
    return r.pass ? 0 : 1;
}

int cmd_expand(const std::string& id, int trunc, int threads, bool json, bool xdeg_report,
               std::ostream& out) {
    const SeriesEntry& entry = find_series(id);
    XLaurentSeries s = entry.make(trunc > 0 ? trunc : entry.default_trunc, threads);
    if (json) {
        out << series_json(s).dump(2) << "\n";
    } else {
        std::vector<int> sup = s.x_support();
        if (sup.empty() || (sup.size() == 1 && sup[0] == 0))
            out << s.x_part(0).str() << "\n";
        else
            out << s.str() << "\n";
    }
    if (xdeg_report) {
        std::vector<int> sup = s.x_support();
        if (sup.empty())
            out << "x-degrees: none\n";
        else
            out << "x-degrees: min=" << sup.front() << " max=" << sup.back() << "\n";
    }
    return 0;
}

int cmd_table(const std::string& family, int n_max, bool json, std::ostream& out) {
    char fam = family[0];
    int i = family[1] - '0';
    std::vector<QPolynomial> tab = (fam == 'b') ? b_table(i, n_max) : c_table(i, n_max);
    if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (size_t n = 0; n < tab.size(); ++n) {
            auto md = tab[n].min_degree();
            nlohmann::json row = {{"n", n},
                                  {"polynomial", tab[n].str()},
                                  {"value_at_1", tab[n].eval_at_1().str()},
                                  {"min_degree", nullptr}};
            if (md.has_value()) row["min_degree"] = *md;
            rows.push_back(std::move(row));
        }
        out << rows.dump(2) << "\n";
        return 0;
    }
    std::vector<std::array<std::string, 4>> rows = {{"n", "polynomial", "value(1)", "mindeg"}};
    for (size_t n = 0; n < tab.size(); ++n) {
        auto md = tab[n].min_degree();
        rows.push_back({std::to_string(n), tab[n].str(), tab[n].eval_at_1().str(),
                        md.has_value() ? std::to_string(*md) : "-"});
    }
    std::array<size_t, 4> width = {0, 0, 0, 0};
    for (const auto& row : rows)
        for (size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        for (size_t c = 0; c < 4; ++c) {
            if (c) out << " | ";
            out << row[c];
            if (c + 1 < 4) out << std::string(width[c] - row[c].size(), ' ');
        }
        out << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verification of the level-3 path model identity catalog"};
    app.require_subcommand(1);

    std::string verify_id;
    int verify_trunc = 0;
    int verify_threads = 1;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand("verify", "check one identity from the catalog");
    verify->add_option("id", verify_id, "identity id; one of: " + joined_ids(catalog()))
        ->required();
    verify->add_option("--trunc", verify_trunc, "truncation override (0 = per-identity default)");
    verify->add_option("--threads", verify_threads, "worker threads for path enumeration");
    verify->add_flag("--json", verify_json, "machine-readable report");

    std::string expand_id;
    int expand_trunc = 0;
    int expand_threads = 1;
    bool expand_json = false;
    bool expand_xdeg = false;
    CLI::App* expand = app.add_subcommand("expand", "print a series from the catalog");
    expand->add_option("id", expand_id, "series id; one of: " + joined_series_ids(series_catalog()))
        ->required();
    expand->add_option("--trunc", expand_trunc, "truncation override (0 = default)");
    expand->add_option("--threads", expand_threads, "worker threads for path enumeration");
    expand->add_flag("--json", expand_json, "machine-readable series dump");
    expand->add_flag("--xdeg-report", expand_xdeg, "also print the observed x-degree range");

    std::string table_family;
    int table_n = 7;
    bool table_json = false;
    CLI::App* table = app.add_subcommand("table", "print a polynomial table");
    table->add_option("family", table_family, "one of: b1, b2, c1, c2")->required();
    table->add_option("--n", table_n, "largest index (default 7)");
    table->add_flag("--json", table_json, "machine-readable rows");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (verify_trunc < 0 || verify_threads < 1) {
                err << "verify: --trunc must be >= 0 and --threads >= 1\n";
                return 2;
            }
            return cmd_verify(verify_id, verify_trunc, verify_threads, verify_json, out);
        }
        if (expand->parsed()) {
            if (expand_trunc < 0 || expand_threads < 1) {
                err << "expand: --trunc must be >= 0 and --threads >= 1\n";
                return 2;
            }
            return cmd_expand(expand_id, expand_trunc, expand_threads, expand_json, expand_xdeg,
                              out);
        }
        if (table->parsed()) {
            bool known = table_family == "b1" || table_family == "b2" || table_family == "c1" ||
                         table_family == "c2";
            if (!known || table_n < 0) {
                err << "table: family must be one of b1, b2, c1, c2 and --n must be >= 0\n";
                return 2;
            }
            return cmd_table(table_family, table_n, table_json, out);
        }
    } catch (const UnknownIdentity& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnknownSeries& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace qcrystal
