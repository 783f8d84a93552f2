#include "chebmat/matrix_io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <limits>

namespace chebmat {

using nlohmann::json;

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        auto u = j.get<std::uint64_t>();
        if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            return Int(static_cast<long>(u));
        Int v;
        mpz_import(v.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
        return v;
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) throw parse_error("empty string is not an integer");
        size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (pos == s.size()) throw parse_error("'" + s + "' is not an integer");
        for (size_t i = pos; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw parse_error("'" + s + "' is not an integer");
        return Int(s[0] == '+' ? s.substr(1) : s, 10);
    }
    throw parse_error("matrix entries must be integers or decimal strings, got " +
                      std::string(j.type_name()));
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"rows", std::move(rows)}};
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("matrix file must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw parse_error("matrix file needs an integer field \"n\"");
    const auto n64 = j["n"].get<std::int64_t>();
    if (n64 < 1 || n64 > 10000) throw parse_error("dimension out of range: " + std::to_string(n64));
    const int n = static_cast<int>(n64);
    if (!j.contains("rows") || !j["rows"].is_array())
        throw parse_error("matrix file needs an array field \"rows\"");
    const json& rows = j["rows"];
    if (static_cast<int>(rows.size()) != n)
        throw parse_error("expected " + std::to_string(n) + " rows, got " +
                          std::to_string(rows.size()));
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw parse_error("row " + std::to_string(i + 1) + " must have exactly " +
                              std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c) m.set(i, c, int_from_json(row[c]));
    }
    return m;
}

IntMatrix parse_matrix_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

}  // namespace chebmat
