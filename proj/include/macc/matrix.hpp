#pragma once

#include "macc/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace macc {

/// Dense row-major matrix over a GF(2^m) field. The field is passed to the
/// operations rather than stored, so matrices stay plain values.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols);
    FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Symbol> entries);

    static FieldMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Symbol operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Symbol& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Symbol> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<Symbol> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

    const std::vector<Symbol>& entries() const { return entries_; }

    /// Sub-matrix made of the given columns, in the given order.
    FieldMatrix select_columns(std::span<const std::size_t> cols) const;
    FieldMatrix transpose() const;

    bool operator==(const FieldMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> entries_;
};

/// Throws std::invalid_argument when a.cols() != b.rows().
FieldMatrix mat_mul(const Field& field, const FieldMatrix& a, const FieldMatrix& b);

/// Row vector times matrix.
std::vector<Symbol> vec_mul(const Field& field, std::span<const Symbol> v, const FieldMatrix& m);

std::size_t mat_rank(const Field& field, FieldMatrix a);

/// Inverse of a square matrix; throws std::domain_error if singular.
FieldMatrix mat_inverse(const Field& field, const FieldMatrix& a);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<Symbol> x; // filled only when status == Unique
};

/// Solves a * x = y by Gaussian elimination (pivot = first nonzero entry).
/// Inconsistency is reported ahead of rank deficiency.
SolveResult mat_solve(const Field& field, const FieldMatrix& a, std::span<const Symbol> y);

/// Incrementally maintained reduced row-echelon form of a linear system
/// A x = Y, where each right-hand side is a vector of `payload_width`
/// symbols (one column of Y per symbol position of a data block).
///
/// Unknown i is determined once e_i lies in the row space of A; in reduced
/// form that happens exactly when the pivot row of column i has no other
/// nonzero entry.
class RowReducer {
public:
    RowReducer(Field field, std::size_t unknowns, std::size_t payload_width);

    /// Adds one equation. Returns true when it raised the rank. A dependent
    /// row whose payload does not reduce to zero marks the system inconsistent.
    bool add_row(std::span<const Symbol> coeffs, std::span<const Symbol> payload);

    /// Sparse form of add_row: (column, coefficient) pairs.
    bool add_sparse_row(std::span<const std::pair<std::size_t, Symbol>> terms,
                        std::span<const Symbol> payload);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t unknowns() const { return unknowns_; }
    bool inconsistent() const { return inconsistent_; }

    bool determined(std::size_t unknown) const;

    /// Payload of a determined unknown; throws std::logic_error otherwise.
    std::span<const Symbol> value(std::size_t unknown) const;

private:
    Symbol* coeff_row(std::size_t r) { return coeffs_.data() + r * unknowns_; }
    const Symbol* coeff_row(std::size_t r) const { return coeffs_.data() + r * unknowns_; }
    Symbol* payload_row(std::size_t r) { return payloads_.data() + r * width_; }
    const Symbol* payload_row(std::size_t r) const { return payloads_.data() + r * width_; }
    bool insert(std::vector<Symbol>& row, std::vector<Symbol>& payload);

    Field field_;
    std::size_t unknowns_;
    std::size_t width_;
    std::vector<Symbol> coeffs_;
    std::vector<Symbol> payloads_;
    std::vector<std::size_t> pivots_;             // pivot column per stored row
    std::vector<std::ptrdiff_t> row_of_pivot_;    // column -> row, -1 if none
    bool inconsistent_ = false;
};

} // namespace macc
