#include "qcrystal/report.hpp"

#include <sstream>

namespace qcrystal {

namespace {

Report finish_report(Report r, const std::optional<Mismatch>& mm) {
    r.pass = !mm.has_value();
    r.first_mismatch = mm;
    return r;
}

}  // namespace

Report make_series_report(const std::string& identity, int trunc, const XLaurentSeries& lhs,
                          const XLaurentSeries& rhs) {
    Report r;
    r.identity = identity;
    r.trunc = trunc;
    return finish_report(std::move(r), first_mismatch(lhs, rhs));
}

Report make_series_report(const std::string& identity, int trunc, const QSeries& lhs,
                          const QSeries& rhs) {
    Report r;
    r.identity = identity;
    r.trunc = trunc;
    return finish_report(std::move(r), first_mismatch(lhs, rhs));
}

nlohmann::json report_json(const Report& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["trunc"] = r.trunc;
    j["pass"] = r.pass;
    if (r.first_mismatch.has_value()) {
        j["first_mismatch"] = {{"xdeg", r.first_mismatch->xdeg},
                               {"qdeg", r.first_mismatch->qdeg},
                               {"lhs", r.first_mismatch->lhs.str()},
                               {"rhs", r.first_mismatch->rhs.str()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.identity = j.at("identity").get<std::string>();
    r.trunc = j.at("trunc").get<int>();
    r.pass = j.at("pass").get<bool>();
    if (!j.at("first_mismatch").is_null()) {
        const auto& m = j.at("first_mismatch");
        r.first_mismatch = Mismatch{m.at("xdeg").get<int>(), m.at("qdeg").get<int>(),
                                    Coeff(m.at("lhs").get<std::string>()),
                                    Coeff(m.at("rhs").get<std::string>())};
    }
    for (const auto& note : j.at("notes")) r.notes.push_back(note.get<std::string>());
    return r;
}

nlohmann::json series_json(const XLaurentSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (int xe : s.x_support()) {
        nlohmann::json col = nlohmann::json::array();
        QSeries part = s.x_part(xe);
        for (int k = 0; k < part.trunc(); ++k)
            if (part.coeff(k) != 0) col.push_back({k, part.coeff(k).str()});
        terms.push_back({xe, col});
    }
    return {{"trunc", s.trunc()}, {"terms", terms}};
}

nlohmann::json series_json(const QSeries& s) { return series_json(XLaurentSeries::from_q(s)); }

XLaurentSeries series_from_json(const nlohmann::json& j) {
    XLaurentSeries s(j.at("trunc").get<int>());
    for (const auto& row : j.at("terms")) {
        int xe = row.at(0).get<int>();
        QSeries part(s.trunc());
        for (const auto& cell : row.at(1))
            part.set_coeff(cell.at(0).get<int>(), Coeff(cell.at(1).get<std::string>()));
        s.set_x_part(xe, part);
    }
    return s;
}

nlohmann::json crystal_json(const PerfectCrystalSpec& spec) {
    nlohmann::json j;
    j["name"] = spec.name;
    j["elements"] = spec.elements;
    j["level"] = spec.level;
    j["ht_delta"] = spec.ht_delta;
    j["marks"] = spec.marks;
    j["comarks"] = spec.comarks;
    for (int color = 0; color < 2; ++color) {
        std::string key = std::to_string(color);
        for (const auto& [b, v] : spec.f_arrow[static_cast<size_t>(color)])
            j["f_arrows"][key][std::to_string(b)] = v;
        for (const auto& [b, v] : spec.e_arrow[static_cast<size_t>(color)])
            j["e_arrows"][key][std::to_string(b)] = v;
        for (const auto& [b, v] : spec.eps[static_cast<size_t>(color)])
            j["eps"][key][std::to_string(b)] = v;
        for (const auto& [b, v] : spec.phi[static_cast<size_t>(color)])
            j["phi"][key][std::to_string(b)] = v;
    }
    for (const auto& [b, wt] : spec.classical_weight) j["weights"][std::to_string(b)] = wt;
    nlohmann::json energy = nlohmann::json::array();
    for (int a : spec.elements) {
        nlohmann::json row = nlohmann::json::array();
        for (int b : spec.elements) row.push_back(spec.energy(a, b));
        energy.push_back(row);
    }
    j["energy"] = energy;
    return j;
}

std::string format_text(const Report& r) {
    std::ostringstream out;
    out << r.identity << ": " << (r.pass ? "PASS" : "FAIL");
    if (r.trunc > 0) out << " (mod q^" << r.trunc << ")";
    out << "\n";
    if (r.first_mismatch.has_value()) {
        out << "  first mismatch at x^" << r.first_mismatch->xdeg << " q^" << r.first_mismatch->qdeg
            << ": lhs " << r.first_mismatch->lhs.str() << ", rhs " << r.first_mismatch->rhs.str()
            << "\n";
    }
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
    return out.str();
}

}  // namespace qcrystal
