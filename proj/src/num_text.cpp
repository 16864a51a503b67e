#include "linebal/num_text.hpp"

#include <charconv>
#include <cstdio>

namespace linebal {

std::string double_text(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fixed_text(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, v);
    return buf;
}

bool parse_double_text(const std::string& text, double& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

bool parse_int_text(const std::string& text, int& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

}  // namespace linebal
