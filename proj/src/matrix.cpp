#include "macc/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace macc {

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0)
{
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Symbol> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("FieldMatrix: entry count " + std::to_string(entries_.size())
                                    + " != " + std::to_string(rows) + "x" + std::to_string(cols));
    }
}

FieldMatrix FieldMatrix::identity(std::size_t n)
{
    FieldMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> cols) const
{
    FieldMatrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) {
                throw std::out_of_range("select_columns: column index out of range");
            }
            out(r, j) = (*this)(r, cols[j]);
        }
    }
    return out;
}

FieldMatrix FieldMatrix::transpose() const
{
    FieldMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

FieldMatrix mat_mul(const Field& field, const FieldMatrix& a, const FieldMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch " + std::to_string(a.cols())
                                    + " vs " + std::to_string(b.rows()));
    }
    FieldMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            field.axpy(out.row(i).data(), b.row(k).data(), b.cols(), a(i, k));
        }
    }
    return out;
}

std::vector<Symbol> vec_mul(const Field& field, std::span<const Symbol> v, const FieldMatrix& m)
{
    if (v.size() != m.rows()) {
        throw std::invalid_argument("vec_mul: length mismatch");
    }
    std::vector<Symbol> out(m.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        field.axpy(out.data(), m.row(k).data(), m.cols(), v[k]);
    }
    return out;
}

namespace {

// In-place forward elimination with an optional augmented block that is
// transformed alongside. Returns pivot columns in row order.
std::vector<std::size_t> eliminate(const Field& field, FieldMatrix& a, FieldMatrix* aug, bool reduce_above)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        if (p != r) {
            std::swap_ranges(a.row(p).begin(), a.row(p).end(), a.row(r).begin());
            if (aug) {
                std::swap_ranges(aug->row(p).begin(), aug->row(p).end(), aug->row(r).begin());
            }
        }
        const Symbol inv = field.inv(a(r, c));
        field.scale(a.row(r).data(), a.cols(), inv);
        if (aug) {
            field.scale(aug->row(r).data(), aug->cols(), inv);
        }
        for (std::size_t i = reduce_above ? 0 : r + 1; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) {
                continue;
            }
            const Symbol f = a(i, c);
            field.axpy(a.row(i).data(), a.row(r).data(), a.cols(), f);
            if (aug) {
                field.axpy(aug->row(i).data(), aug->row(r).data(), aug->cols(), f);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t mat_rank(const Field& field, FieldMatrix a)
{
    return eliminate(field, a, nullptr, false).size();
}

FieldMatrix mat_inverse(const Field& field, const FieldMatrix& a)
{
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("mat_inverse: matrix is not square");
    }
    FieldMatrix work = a;
    FieldMatrix inv = FieldMatrix::identity(a.rows());
    if (eliminate(field, work, &inv, true).size() != a.rows()) {
        throw std::domain_error("mat_inverse: matrix is singular");
    }
    return inv;
}

SolveResult mat_solve(const Field& field, const FieldMatrix& a, std::span<const Symbol> y)
{
    if (a.rows() != y.size()) {
        throw std::invalid_argument("mat_solve: rhs length does not match row count");
    }
    FieldMatrix work = a;
    FieldMatrix rhs(y.size(), 1, std::vector<Symbol>(y.begin(), y.end()));
    const auto pivots = eliminate(field, work, &rhs, true);

    for (std::size_t i = pivots.size(); i < a.rows(); ++i) {
        if (rhs(i, 0) != 0) {
            return {SolveStatus::Inconsistent, {}};
        }
    }
    if (pivots.size() < a.cols()) {
        return {SolveStatus::Underdetermined, {}};
    }
    SolveResult res{SolveStatus::Unique, std::vector<Symbol>(a.cols(), 0)};
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        res.x[pivots[i]] = rhs(i, 0);
    }
    return res;
}

RowReducer::RowReducer(Field field, std::size_t unknowns, std::size_t payload_width)
    : field_(std::move(field)), unknowns_(unknowns), width_(payload_width),
      row_of_pivot_(unknowns, -1)
{
}

bool RowReducer::add_row(std::span<const Symbol> coeffs, std::span<const Symbol> payload)
{
    if (coeffs.size() != unknowns_ || payload.size() != width_) {
        throw std::invalid_argument("RowReducer::add_row: size mismatch");
    }
    std::vector<Symbol> row(coeffs.begin(), coeffs.end());
    std::vector<Symbol> pay(payload.begin(), payload.end());
    return insert(row, pay);
}

bool RowReducer::add_sparse_row(std::span<const std::pair<std::size_t, Symbol>> terms,
                                std::span<const Symbol> payload)
{
    if (payload.size() != width_) {
        throw std::invalid_argument("RowReducer::add_sparse_row: payload width mismatch");
    }
    std::vector<Symbol> row(unknowns_, 0);
    for (const auto& [col, coeff] : terms) {
        if (col >= unknowns_) {
            throw std::out_of_range("RowReducer::add_sparse_row: column out of range");
        }
        row[col] ^= coeff;
    }
    std::vector<Symbol> pay(payload.begin(), payload.end());
    return insert(row, pay);
}

bool RowReducer::insert(std::vector<Symbol>& row, std::vector<Symbol>& pay)
{
    // Reduce against existing pivots. Rows are kept fully reduced, so one
    // pass suffices.
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Symbol f = row[pivots_[r]];
        if (f != 0) {
            field_.axpy(row.data(), coeff_row(r), unknowns_, f);
            field_.axpy(pay.data(), payload_row(r), width_, f);
        }
    }
    const auto it = std::find_if(row.begin(), row.end(), [](Symbol s) { return s != 0; });
    if (it == row.end()) {
        if (std::any_of(pay.begin(), pay.end(), [](Symbol s) { return s != 0; })) {
            inconsistent_ = true;
        }
        return false;
    }
    const auto pivot = static_cast<std::size_t>(it - row.begin());
    const Symbol inv = field_.inv(*it);
    field_.scale(row.data(), unknowns_, inv);
    field_.scale(pay.data(), width_, inv);

    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Symbol f = coeff_row(r)[pivot];
        if (f != 0) {
            field_.axpy(coeff_row(r), row.data(), unknowns_, f);
            field_.axpy(payload_row(r), pay.data(), width_, f);
        }
    }
    coeffs_.insert(coeffs_.end(), row.begin(), row.end());
    payloads_.insert(payloads_.end(), pay.begin(), pay.end());
    row_of_pivot_[pivot] = static_cast<std::ptrdiff_t>(pivots_.size());
    pivots_.push_back(pivot);
    return true;
}

bool RowReducer::determined(std::size_t unknown) const
{
    if (unknown >= unknowns_) {
        throw std::out_of_range("RowReducer::determined: unknown out of range");
    }
    const auto r = row_of_pivot_[unknown];
    if (r < 0) {
        return false;
    }
    const Symbol* row = coeff_row(static_cast<std::size_t>(r));
    for (std::size_t c = 0; c < unknowns_; ++c) {
        if (c != unknown && row[c] != 0) {
            return false;
        }
    }
    return true;
}

std::span<const Symbol> RowReducer::value(std::size_t unknown) const
{
    if (!determined(unknown)) {
        throw std::logic_error("RowReducer::value: unknown is not determined");
    }
    return {payload_row(static_cast<std::size_t>(row_of_pivot_[unknown])), width_};
}

} // namespace macc
