#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qdec/errors.hpp"

namespace qdec {

enum class file_format { csv, json };

// Named real-valued series over a common time grid, with run parameters
// echoed as metadata. Channel and metadata order is preserved so identical
// runs serialize byte-identically.
struct time_series {
    std::vector<double> times;  // seconds
    std::vector<std::pair<std::string, std::vector<double>>> channels;
    std::vector<std::pair<std::string, std::string>> metadata;

    const std::vector<double>* channel(const std::string& name) const {
        for (const auto& [n, v] : channels)
            if (n == name) return &v;
        return nullptr;
    }

    void add_meta(const std::string& key, const std::string& value) {
        metadata.emplace_back(key, value);
    }
};

// 17 significant digits: enough for strtod to recover the exact double.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline void validate_series(const time_series& s) {
    if (s.times.empty())
        throw invariant_error("time_series: empty time grid");
    for (std::size_t i = 1; i < s.times.size(); ++i)
        if (!(s.times[i] > s.times[i - 1]))
            throw invariant_error("time_series: times must be strictly increasing");
    for (const auto& [name, vals] : s.channels) {
        if (vals.size() != s.times.size())
            throw invariant_error("time_series: channel '" + name + "' length mismatch");
        for (double v : vals)
            if (!std::isfinite(v))
                throw invariant_error("time_series: channel '" + name + "' has non-finite values");
    }
}

inline void write_csv(const time_series& s, std::ostream& os) {
    validate_series(s);
    for (const auto& [k, v] : s.metadata) os << "# " << k << " = " << v << "\n";
    os << "t_s";
    for (const auto& [name, vals] : s.channels) os << "," << name;
    os << "\n";
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        os << format_double(s.times[i]);
        for (const auto& [name, vals] : s.channels) os << "," << format_double(vals[i]);
        os << "\n";
    }
}

inline void write_json(const time_series& s, std::ostream& os) {
    validate_series(s);
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.metadata) meta[k] = v;
    nlohmann::ordered_json series = nlohmann::ordered_json::object();
    series["t_s"] = s.times;
    for (const auto& [name, vals] : s.channels) series[name] = vals;
    nlohmann::ordered_json root = nlohmann::ordered_json::object();
    root["metadata"] = meta;
    root["series"] = series;
    os << root.dump(2) << "\n";
}

inline void write_series(const time_series& s, std::ostream& os, file_format fmt) {
    if (fmt == file_format::csv)
        write_csv(s, os);
    else
        write_json(s, os);
}

inline void write_series_file(const time_series& s, const std::string& path, file_format fmt) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw io_error("cannot open '" + path + "' for writing");
    write_series(s, os, fmt);
    os.flush();
    if (!os)
        throw io_error("failed writing '" + path + "'");
}

namespace detail {

inline double parse_double_field(const std::string& field, const std::string& where) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw io_error(where + ": bad numeric field '" + field + "'");
    return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

inline time_series read_csv(std::istream& is, const std::string& where) {
    time_series s;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body.front() == ' ') body.erase(0, 1);
            const auto sep = body.find(" = ");
            if (sep != std::string::npos)
                s.add_meta(body.substr(0, sep), body.substr(sep + 3));
            continue;
        }
        const auto fields = detail::split_csv_line(line);
        if (!have_header) {
            if (fields.empty() || fields[0] != "t_s")
                throw io_error(where + ": first CSV column must be t_s");
            for (std::size_t i = 1; i < fields.size(); ++i)
                s.channels.emplace_back(fields[i], std::vector<double>{});
            have_header = true;
            continue;
        }
        if (fields.size() != s.channels.size() + 1)
            throw io_error(where + ": row has wrong field count");
        s.times.push_back(detail::parse_double_field(fields[0], where));
        for (std::size_t i = 1; i < fields.size(); ++i)
            s.channels[i - 1].second.push_back(detail::parse_double_field(fields[i], where));
    }
    if (!have_header)
        throw io_error(where + ": no CSV header found");
    validate_series(s);
    return s;
}

inline time_series read_json(std::istream& is, const std::string& where) {
    nlohmann::ordered_json root;
    try {
        root = nlohmann::ordered_json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw io_error(where + ": JSON parse failure: " + e.what());
    }
    if (!root.is_object() || !root.contains("metadata") || !root.contains("series"))
        throw io_error(where + ": expected top-level metadata and series objects");
    time_series s;
    try {
        for (const auto& [k, v] : root["metadata"].items())
            s.add_meta(k, v.get<std::string>());
        const auto& series = root["series"];
        if (!series.contains("t_s"))
            throw io_error(where + ": series object lacks t_s");
        s.times = series["t_s"].get<std::vector<double>>();
        for (const auto& [k, v] : series.items())
            if (k != "t_s")
                s.channels.emplace_back(k, v.get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
        throw io_error(where + ": malformed series file: " + e.what());
    }
    validate_series(s);
    return s;
}

// Sniffs the format: JSON starts with '{'.
inline time_series read_series_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw io_error("cannot open '" + path + "' for reading");
    int c = is.peek();
    while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
        is.get();
        c = is.peek();
    }
    if (c == '{') return read_json(is, path);
    return read_csv(is, path);
}

} // namespace qdec
