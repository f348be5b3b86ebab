#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace macc {

/// One field symbol; only the low `degree` bits are meaningful.
using Symbol = std::uint16_t;

/// Characteristic-2 finite field GF(2^m), 1 <= m <= 16.
///
/// Elements are polynomial-basis bit vectors, so addition is XOR. Each
/// degree uses a fixed primitive polynomial (the numerically smallest one),
/// which lets multiplication go through log/antilog tables built once at
/// construction. Copies share the tables; a Field is an immutable value.
class Field {
public:
    static constexpr int kMaxDegree = 16;

    /// Throws std::out_of_range unless 1 <= degree <= 16.
    explicit Field(int degree);

    /// Shared, lazily built instance per degree.
    static const Field& of_degree(int degree);

    int degree() const { return degree_; }
    std::uint32_t polynomial() const { return poly_; }
    std::uint32_t order() const { return std::uint32_t{1} << degree_; }
    bool contains(std::uint32_t value) const { return value < order(); }

    static Symbol add(Symbol a, Symbol b) { return static_cast<Symbol>(a ^ b); }
    static Symbol sub(Symbol a, Symbol b) { return static_cast<Symbol>(a ^ b); }

    Symbol mul(Symbol a, Symbol b) const
    {
        if (a == 0 || b == 0) {
            return 0;
        }
        return tables_->exp[tables_->log[a] + tables_->log[b]];
    }

    /// Throws std::domain_error for a == 0.
    Symbol inv(Symbol a) const;

    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

    Symbol pow(Symbol a, std::uint64_t e) const;

    /// dst[i] ^= coeff * src[i]; the inner loop of every elimination.
    void axpy(Symbol* dst, const Symbol* src, std::size_t n, Symbol coeff) const;

    /// v[i] *= coeff.
    void scale(Symbol* v, std::size_t n, Symbol coeff) const;

    bool operator==(const Field& o) const { return degree_ == o.degree_; }

private:
    struct Tables {
        std::vector<std::uint32_t> log;
        std::vector<Symbol> exp; // doubled so log a + log b never wraps
    };

    int degree_;
    std::uint32_t poly_;
    std::shared_ptr<const Tables> tables_;
};

/// Primitive polynomial committed for `degree`, as a bitmask including x^m.
std::uint32_t primitive_polynomial(int degree);

/// Convenience constructor mirroring the field_make operation.
inline Field field_make(int degree) { return Field(degree); }

/// Smallest m with 2^m >= n (at least 1).
int degree_for_length(std::uint64_t n);

} // namespace macc
