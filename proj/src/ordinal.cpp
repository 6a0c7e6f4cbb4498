#include "algame/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "algame/errors.hpp"

namespace algame {

Ordinal::Ordinal(bigint omega_coeff, bigint finite_part)
    : omega_coeff_(std::move(omega_coeff)), finite_part_(std::move(finite_part)) {
    if (omega_coeff_ < 0 || finite_part_ < 0)
        throw std::invalid_argument("Ordinal coefficients must be non-negative");
}

Ordinal mex(std::vector<Ordinal> values) {
    std::sort(values.begin(), values.end());
    Ordinal candidate; // 0
    for (const Ordinal& v : values) {
        if (v < candidate) continue; // duplicate of something already counted
        if (v == candidate)
            candidate = candidate.successor();
        else
            break; // gap found
    }
    return candidate;
}

Ordinal natural_sum(const Ordinal& x, const Ordinal& y) {
    return Ordinal(x.omega_coeff() + y.omega_coeff(), x.finite_part() + y.finite_part());
}

std::string render(const Ordinal& x) {
    if (x.omega_coeff() == 0) return x.finite_part().str();
    std::string out = "w";
    if (x.omega_coeff() != 1) out += "*" + x.omega_coeff().str();
    if (x.finite_part() != 0) out += "+" + x.finite_part().str();
    return out;
}

namespace {

// Parses a non-empty decimal literal starting at pos; advances pos.
bigint parse_nat(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected a number in ordinal '" + s + "'");
    return bigint(s.substr(start, pos - start));
}

} // namespace

Ordinal parse_ordinal(const std::string& text) {
    std::size_t pos = 0;
    bigint a = 0, b = 0;
    if (pos < text.size() && text[pos] == 'w') {
        ++pos;
        a = 1;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            a = parse_nat(text, pos);
        }
        if (pos < text.size() && text[pos] == '+') {
            ++pos;
            b = parse_nat(text, pos);
        }
    } else {
        b = parse_nat(text, pos);
    }
    if (pos != text.size()) throw parse_error("trailing characters in ordinal '" + text + "'");
    return Ordinal(a, b);
}

} // namespace algame
