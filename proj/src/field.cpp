#include "macc/field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace macc {

namespace {

// Numerically smallest primitive polynomial of each degree. Degree 1 uses
// x + 1 so that the element 1 generates the (trivial) multiplicative group.
constexpr std::array<std::uint32_t, Field::kMaxDegree + 1> kPrimitive = {
    0x0,    0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,    0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x402b, 0x8003, 0x1002d,
};

} // namespace

std::uint32_t primitive_polynomial(int degree)
{
    if (degree < 1 || degree > Field::kMaxDegree) {
        throw std::out_of_range("field degree must be in [1, 16], got " + std::to_string(degree));
    }
    return kPrimitive[static_cast<std::size_t>(degree)];
}

int degree_for_length(std::uint64_t n)
{
    int m = 1;
    while ((std::uint64_t{1} << m) < n) {
        ++m;
    }
    return m;
}

Field::Field(int degree)
    : degree_(degree), poly_(primitive_polynomial(degree))
{
    auto t = std::make_shared<Tables>();
    const std::uint32_t q = order();
    const std::uint32_t group = q - 1;
    t->log.assign(q, 0);
    t->exp.assign(2 * static_cast<std::size_t>(group), 0);

    const std::uint32_t generator = degree == 1 ? 1 : 2;
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        t->exp[i] = static_cast<Symbol>(x);
        t->exp[i + group] = static_cast<Symbol>(x);
        t->log[x] = i;
        // x *= generator, reduced modulo the primitive polynomial
        if (generator == 2) {
            x <<= 1;
            if (x & q) {
                x ^= poly_;
            }
        }
    }
    tables_ = std::move(t);
}

const Field& Field::of_degree(int degree)
{
    static const std::vector<Field> all = [] {
        std::vector<Field> v;
        for (int m = 1; m <= kMaxDegree; ++m) {
            v.emplace_back(m);
        }
        return v;
    }();
    primitive_polynomial(degree); // range check
    return all[static_cast<std::size_t>(degree - 1)];
}

Symbol Field::inv(Symbol a) const
{
    if (a == 0) {
        throw std::domain_error("inverse of zero in GF(2^m)");
    }
    const std::uint32_t group = order() - 1;
    return tables_->exp[(group - tables_->log[a]) % group];
}

Symbol Field::pow(Symbol a, std::uint64_t e) const
{
    if (e == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    const std::uint64_t group = order() - 1;
    return tables_->exp[static_cast<std::size_t>((tables_->log[a] * (e % group)) % group)];
}

void Field::axpy(Symbol* dst, const Symbol* src, std::size_t n, Symbol coeff) const
{
    if (coeff == 0) {
        return;
    }
    if (coeff == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            dst[i] ^= src[i];
        }
        return;
    }
    const std::uint32_t lc = tables_->log[coeff];
    const Symbol* exp = tables_->exp.data();
    const std::uint32_t* log = tables_->log.data();
    for (std::size_t i = 0; i < n; ++i) {
        if (src[i] != 0) {
            dst[i] ^= exp[log[src[i]] + lc];
        }
    }
}

void Field::scale(Symbol* v, std::size_t n, Symbol coeff) const
{
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = mul(v[i], coeff);
    }
}

} // namespace macc
