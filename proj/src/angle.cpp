#include "zrot/angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zrot {

namespace {

double parse_number(std::string_view s, std::string_view whole) {
    double v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
    return v;
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty angle");

    double v;
    const bool has_pi = s.size() >= 2 && std::tolower(static_cast<unsigned char>(s[s.size() - 2])) == 'p' &&
                        std::tolower(static_cast<unsigned char>(s.back())) == 'i';
    if (has_pi) {
        std::string_view num = s.substr(0, s.size() - 2);
        if (num.empty() || num == "+")
            v = 1;
        else if (num == "-")
            v = -1;
        else
            v = parse_number(num.front() == '+' ? num.substr(1) : num, text);
        v *= std::numbers::pi;
    } else {
        v = parse_number(s.front() == '+' ? s.substr(1) : s, text);
    }
    if (!std::isfinite(v)) throw std::invalid_argument("angle is not finite: '" + std::string(text) + "'");
    return v;
}

}  // namespace zrot
