#ifndef ALGAME_ORDINAL_HPP
#define ALGAME_ORDINAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <vector>

namespace algame {

using bigint = boost::multiprecision::cpp_int;

/// Ordinal of the form w*a + b (below w^2), which is enough for every game
/// value this library computes. The coefficients are unbounded non-negative
/// integers.
class Ordinal {
public:
    Ordinal() = default;
    Ordinal(bigint omega_coeff, bigint finite_part);

    /// The finite ordinal b.
    static Ordinal finite(bigint b) { return Ordinal(0, std::move(b)); }
    /// w*a.
    static Ordinal omega(bigint a = 1) { return Ordinal(std::move(a), 0); }

    const bigint& omega_coeff() const { return omega_coeff_; }
    const bigint& finite_part() const { return finite_part_; }

    bool is_finite() const { return omega_coeff_ == 0; }
    bool is_zero() const { return omega_coeff_ == 0 && finite_part_ == 0; }

    Ordinal successor() const { return Ordinal(omega_coeff_, finite_part_ + 1); }

    friend bool operator==(const Ordinal&, const Ordinal&) = default;
    friend std::strong_ordering operator<=>(const Ordinal& x, const Ordinal& y) {
        if (auto c = x.omega_coeff_.compare(y.omega_coeff_); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        auto c = x.finite_part_.compare(y.finite_part_);
        if (c == 0) return std::strong_ordering::equal;
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    bigint omega_coeff_ = 0;
    bigint finite_part_ = 0;
};

/// Least ordinal not contained in the collection. The collection may be
/// empty; it is copied and sorted internally. Always finite for finite input.
Ordinal mex(std::vector<Ordinal> values);

/// Hessenberg (natural) sum: coefficient-wise addition. Agrees with ordinary
/// addition on finite ordinals.
Ordinal natural_sum(const Ordinal& x, const Ordinal& y);

/// Text form "w*a+b" with zero terms omitted and unit coefficients implied:
/// "0", "5", "w", "w+2", "w*2+3".
std::string render(const Ordinal& x);

/// Inverse of render(). Throws parse_error on malformed input.
Ordinal parse_ordinal(const std::string& text);

} // namespace algame

#endif
