#ifndef DEZA_RATIONAL_HPP
#define DEZA_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace deza {

/// Exact fraction in lowest terms with a positive denominator.
class Rational
{
public:
    constexpr Rational(std::int64_t value = 0) : num_(value), den_(1) {}

    constexpr Rational(std::int64_t num, std::int64_t den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    constexpr std::int64_t numerator() const { return num_; }
    constexpr std::int64_t denominator() const { return den_; }
    constexpr bool is_integer() const { return den_ == 1; }

    std::string to_string() const
    {
        return is_integer() ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr std::strong_ordering operator<=>(const Rational& x, const Rational& y)
    {
        return x.num_ * y.den_ <=> y.num_ * x.den_;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace deza

#endif // DEZA_RATIONAL_HPP
