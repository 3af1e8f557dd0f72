#ifndef READSEQ_SRC_TEXT_UTIL_HPP
#define READSEQ_SRC_TEXT_UTIL_HPP

#include <charconv>
#include <cstdint>
#include <string>
#include <system_error>
#include <vector>

#include "readseq/errors.hpp"

namespace readseq::detail {

// Shortest representation that round-trips exactly.
inline std::string fmt_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

inline std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

inline std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(delim, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline double parse_double_field(const std::string& text, std::size_t line,
                                 const std::string& field) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ParseError("cannot parse '" + text + "' as a number", line, field);
    }
    return value;
}

inline std::int64_t parse_int_field(const std::string& text, std::size_t line,
                                    const std::string& field) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ParseError("cannot parse '" + text + "' as an integer", line, field);
    }
    return value;
}

} // namespace readseq::detail

#endif
