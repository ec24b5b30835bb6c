#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcrystal/report.hpp"
#include "qcrystal/series.hpp"

namespace qcrystal {

struct UnknownIdentity : std::runtime_error {
    explicit UnknownIdentity(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownSeries : std::runtime_error {
    explicit UnknownSeries(const std::string& msg) : std::runtime_error(msg) {}
};

// A verifiable identity: stable id, one-line description, default working
// truncation, entry point.  For the randomized and table-valued entries the
// truncation knob is reinterpreted (sample count, table depth, search depth);
// the description says which.
struct CatalogEntry {
    std::string id;
    std::string description;
    int default_trunc;
    std::function<Report(int trunc, int threads)> run;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_identity(const std::string& id);  // throws UnknownIdentity

// An expandable series, truncated at q^trunc.
struct SeriesEntry {
    std::string id;
    std::string description;
    int default_trunc;
    std::function<XLaurentSeries(int trunc, int threads)> make;
};

const std::vector<SeriesEntry>& series_catalog();
const SeriesEntry& find_series(const std::string& id);  // throws UnknownSeries

}  // namespace qcrystal
