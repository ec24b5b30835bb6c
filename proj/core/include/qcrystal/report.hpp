#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qcrystal/crystal.hpp"
#include "qcrystal/series.hpp"

namespace qcrystal {

// Outcome of one identity verification.  A mathematical disagreement is a
// failing report, not an exception; exceptions are reserved for misuse and
// internal errors.
struct Report {
    std::string identity;
    int trunc = 0;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    std::vector<std::string> notes;
};

Report make_series_report(const std::string& identity, int trunc, const XLaurentSeries& lhs,
                          const XLaurentSeries& rhs);
Report make_series_report(const std::string& identity, int trunc, const QSeries& lhs,
                          const QSeries& rhs);

nlohmann::json report_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

// Schema shared by both series types: {"trunc": N, "terms": [[xdeg,
// [[qdeg, "coeff"], ...]], ...]} with coefficients as decimal strings.
nlohmann::json series_json(const XLaurentSeries& s);
nlohmann::json series_json(const QSeries& s);
XLaurentSeries series_from_json(const nlohmann::json& j);

nlohmann::json crystal_json(const PerfectCrystalSpec& spec);

std::string format_text(const Report& r);

}  // namespace qcrystal
