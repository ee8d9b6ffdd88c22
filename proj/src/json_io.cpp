#include "kcanon/json_io.hpp"

#include <limits>
#include <sstream>

namespace kcanon {

namespace {

json coeff_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi)
        return json(static_cast<std::int64_t>(c));
    return json(c.str());
}

Int coeff_from_json(const json& j) {
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    if (j.is_string())
        return Int(j.get<std::string>());
    throw ParseError("coefficient must be an integer or a decimal string");
}

Weight weight_from_json(const json& j, int rank) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw ParseError("weight must be an array of " + std::to_string(rank) + " integers");
    std::vector<std::int64_t> c;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw ParseError("weight coordinates must be integers");
        c.push_back(e.get<std::int64_t>());
    }
    return Weight(std::move(c));
}

} // namespace

json laurent_to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [k, c] : p.coeffs())
        j[std::to_string(k)] = coeff_to_json(c);
    return j;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("Laurent polynomial must be a JSON object");
    LaurentPoly p;
    for (const auto& [key, val] : j.items()) {
        std::size_t pos = 0;
        std::int64_t k = 0;
        try {
            k = std::stoll(key, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad exponent key '" + key + "'");
        }
        if (pos != key.size())
            throw ParseError("bad exponent key '" + key + "'");
        Int c = coeff_from_json(val);
        if (c == 0)
            throw ParseError("zero coefficient stored at exponent " + key);
        p.set_coeff(k, std::move(c));
    }
    return p;
}

json coords_to_json(const std::string& basis, const std::map<Weight, LaurentPoly>& coords) {
    json j;
    j["basis"] = basis;
    json terms = json::array();
    for (const auto& [w, c] : coords) {
        json t;
        t["weight"] = w.coords;
        t["coeff"] = laurent_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

json kclass_to_json(const KClass& x) { return coords_to_json("e", x.coords()); }

KClass kclass_from_json(const RootSystem& rs, const Straightener& str, const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("K-class JSON needs 'basis' and 'terms'");
    const std::string basis = j["basis"].get<std::string>();
    if (basis != "e" && basis != "AJ")
        throw ParseError("K-class basis must be 'e' or 'AJ'");
    std::map<Weight, LaurentPoly> coords;
    for (const auto& t : j["terms"]) {
        Weight w = weight_from_json(t.at("weight"), rs.rank());
        LaurentPoly c = laurent_from_json(t.at("coeff"));
        if (!coords.emplace(std::move(w), std::move(c)).second)
            throw ParseError("duplicate weight in K-class terms");
    }
    if (basis == "AJ")
        return str.from_aj_coords(coords);
    KClass x(rs);
    for (const auto& [w, c] : coords)
        x.add_term(w, c);
    return x;
}

json graded_character_to_json(const GradedCharacter& gc) {
    json j = coords_to_json("V", gc.mults);
    j["cutoff"] = gc.cutoff;
    return j;
}

json bmatrix_to_json(const BMatrix& m) {
    json j;
    json cols = json::array();
    for (const auto& w : m.columns)
        cols.push_back(w.coords);
    j["columns"] = std::move(cols);
    json rows = json::array();
    for (const auto& w : m.rows)
        rows.push_back(w.coords);
    j["rows"] = std::move(rows);
    json entries = json::array();
    for (const auto& [key, c] : m.entries) {
        json e;
        e["row"] = key.first.coords;
        e["col"] = key.second.coords;
        e["coeff"] = laurent_to_json(c);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string bmatrix_to_tsv(const BMatrix& m) {
    std::ostringstream os;
    os << "mu\\lambda";
    for (const auto& col : m.columns)
        os << "\t" << col.str();
    os << "\n";
    for (const auto& row : m.rows) {
        os << row.str();
        for (const auto& col : m.columns) {
            auto it = m.entries.find(std::make_pair(row, col));
            os << "\t" << (it == m.entries.end() ? "0" : it->second.str());
        }
        os << "\n";
    }
    return os.str();
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["check"] = r.check;
    j["system"] = r.system;
    j["status"] = r.pass ? "pass" : "fail";
    if (r.lambda)
        j["lambda"] = r.lambda->coords;
    j["detail"] = r.detail;
    return j;
}

std::string report_to_tsv(const VerificationReport& r) {
    std::ostringstream os;
    os << r.check << "\t" << r.system << "\t" << (r.pass ? "pass" : "fail") << "\t"
       << (r.lambda ? r.lambda->str() : "-") << "\t" << r.detail;
    return os.str();
}

} // namespace kcanon
