#include "macc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace macc {

using boost::multiprecision::cpp_rational;

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    v_ = den < 0 ? cpp_rational(-num, -den) : cpp_rational(num, den);
}

Rational Rational::operator-() const
{
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.v_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (a.v_ < b.v_) {
        return std::strong_ordering::less;
    }
    if (a.v_ > b.v_) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

BigInt Rational::ceil() const
{
    const BigInt n = numerator();
    const BigInt d = denominator();
    BigInt q = n / d; // truncates toward zero
    if (q * d != n && n > 0) {
        ++q;
    }
    return q;
}

std::string Rational::str() const
{
    if (is_integer()) {
        return numerator().str();
    }
    return numerator().str() + "/" + denominator().str();
}

std::string Rational::decimal(int digits) const
{
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    BigInt n = numerator();
    const BigInt d = denominator();
    const bool neg = n < 0;
    if (neg) {
        n = -n;
    }
    // round half up on the magnitude
    BigInt scaled = (n * scale * 2 + d) / (d * 2);
    const BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

double Rational::to_double() const { return v_.convert_to<double>(); }

Rational Rational::parse(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational::parse: cannot parse '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace macc
