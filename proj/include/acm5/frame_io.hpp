#pragma once

// FrameSpec files (JSON):
//
//   {
//     "name": "kenmotsu_w1",
//     "brackets":   [{"i": 1, "j": 5, "k": 1, "value": 1}, ...],
//     "connection": [{"i": 1, "j": 5, "k": 1, "value": "-1"}, ...]
//   }
//
// brackets entries give c^k_ij, connection entries omega_ij(e_k); indices are
// 1-based, values are integers or "p/q" strings, omitted entries are zero and
// each unordered pair {i, j} with a given k may appear once. At least one of
// "brackets" and "connection" is required.

#include "acm5/frame.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

namespace acm5 {

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t n = 0; n + 1 < byte && n < text.size(); ++n) {
        if (text[n] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

inline Scalar json_scalar(const nlohmann::json& v, const std::string& path)
{
    if (v.is_number_integer())
        return Scalar(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_scalar(v.get<std::string>());
        } catch (const std::exception&) {
            throw FrameError(path + ": not a rational literal: \"" + v.get<std::string>() + "\"");
        }
    }
    throw FrameError(path + ": expected an integer or a \"p/q\" string");
}

inline int json_index(const nlohmann::json& e, const char* key, const std::string& path)
{
    const std::string p = path + "." + key;
    if (!e.contains(key))
        throw FrameError(p + ": missing");
    const auto& v = e.at(key);
    if (!v.is_number_integer())
        throw FrameError(p + ": expected an integer index");
    const long n = v.get<long>();
    if (n < 1 || n > kDim)
        throw FrameError(p + ": index " + std::to_string(n) + " out of range 1..5");
    return static_cast<int>(n);
}

inline Coeff3 json_table(const nlohmann::json& arr, const std::string& field)
{
    if (!arr.is_array())
        throw FrameError(field + ": expected a list of {i, j, k, value} records");
    Coeff3 c = zero_coeff3();
    std::set<std::tuple<int, int, int>> seen;
    for (std::size_t n = 0; n < arr.size(); ++n) {
        const std::string path = field + "[" + std::to_string(n) + "]";
        const auto& e = arr[n];
        if (!e.is_object())
            throw FrameError(path + ": expected an object");
        for (const auto& [key, _] : e.items())
            if (key != "i" && key != "j" && key != "k" && key != "value")
                throw FrameError(path + "." + key + ": unknown field");
        const int i = json_index(e, "i", path), j = json_index(e, "j", path), k = json_index(e, "k", path);
        if (!e.contains("value"))
            throw FrameError(path + ".value: missing");
        const Scalar v = json_scalar(e.at("value"), path + ".value");
        if (i == j) {
            if (sgn(v) != 0)
                throw FrameError(path + ": nonzero entry with i = j");
            continue;
        }
        if (!seen.insert({std::min(i, j), std::max(i, j), k}).second)
            throw FrameError(path + ": duplicate entry for (" + std::to_string(std::min(i, j)) + ", " +
                             std::to_string(std::max(i, j)) + ", " + std::to_string(k) + ")");
        c[i - 1][j - 1][k - 1] = v;
        c[j - 1][i - 1][k - 1] = -v;
    }
    return c;
}

} // namespace detail

/// Parses and validates a FrameSpec. Syntax errors carry line:column,
/// semantic errors the field path. Throws FrameError.
inline FrameSpec parse_frame_json(const std::string& text, const std::string& source = "<input>")
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string what = e.what();
        if (auto p = what.find("syntax error"); p != std::string::npos)
            what = what.substr(p);
        throw FrameError(source + ":" + detail::line_col(text, e.byte) + ": " + what);
    }
    if (!doc.is_object())
        throw FrameError(source + ": top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "name" && key != "brackets" && key != "connection")
            throw FrameError(source + ": " + key + ": unknown field");
    FrameSpec f;
    if (!doc.contains("name") || !doc.at("name").is_string())
        throw FrameError(source + ": name: expected a string");
    f.name = doc.at("name").get<std::string>();
    try {
        if (doc.contains("brackets"))
            f.brackets = detail::json_table(doc.at("brackets"), "brackets");
        if (doc.contains("connection"))
            f.connection = detail::json_table(doc.at("connection"), "connection");
        validate(f);
    } catch (const FrameError& e) {
        throw FrameError(source + ": " + e.what());
    }
    return f;
}

inline FrameSpec load_frame_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FrameError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_frame_json(ss.str(), path);
}

namespace detail {

inline nlohmann::ordered_json json_value(const Scalar& s)
{
    if (s.get_den() == 1 && s.get_num().fits_slong_p())
        return s.get_num().get_si();
    return format_scalar(s);
}

inline nlohmann::ordered_json table_json(const Coeff3& c)
{
    auto arr = nlohmann::ordered_json::array();
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                if (sgn(c[i][j][k]) != 0)
                    arr.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", json_value(c[i][j][k])}});
    return arr;
}

} // namespace detail

/// Deterministic JSON: entries with i < j in lexicographic (i, j, k) order.
inline std::string frame_to_json(const FrameSpec& f)
{
    nlohmann::ordered_json doc;
    doc["name"] = f.name;
    if (f.brackets)
        doc["brackets"] = detail::table_json(*f.brackets);
    if (f.connection)
        doc["connection"] = detail::table_json(*f.connection);
    return doc.dump(2) + "\n";
}

} // namespace acm5
