#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <qseries/qseries.hpp>

namespace qseries {

// Dense row-major matrix of exact rationals.
class RationalMatrix
{
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

// Determinant by Gaussian elimination. Throws std::invalid_argument for non-square input.
Rational determinant(const RationalMatrix& m);

// An ordered list y_1..y_k of series moved onto one common grid.
class SeriesVector
{
public:
    // Throws std::invalid_argument for an empty list.
    explicit SeriesVector(std::vector<QSeries> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    const QSeries& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const QSeries> entries() const noexcept { return entries_; }
    std::int64_t grid_denominator() const noexcept { return grid_; }
    // Minimum precision over the entries.
    const Rational& precision() const noexcept { return precision_; }

private:
    std::vector<QSeries> entries_;
    std::int64_t grid_ = 1;
    Rational precision_;
};

// prod_{j < i} (x_i - x_j); 1 for fewer than two entries.
Rational vandermonde(std::span<const Rational> xs);

// det of the k x k matrix whose row r holds (q d/dq)^r of each entry.
// Laplace expansion for k <= 4, Gaussian elimination over the truncated Laurent
// series (pivoting on the lowest valuation) above that.
QSeries wronskian(const SeriesVector& v);

// The same determinant as a multi-sum over one term per entry, each tuple weighted by
// the Vandermonde of its exponents. Independent of wronskian(); cost is the product
// of the entry sizes.
QSeries wronskian_vandermonde_expand(const SeriesVector& v);

// Differential form of Abel's identity: checks (q d/dq) W + f1 * W == 0 below `order`.
// Throws std::domain_error("degenerate fundamental system") when W is zero at its precision,
// and std::invalid_argument("insufficient precision") when order exceeds what is known.
bool abel_log_derivative_check(const SeriesVector& v, const QSeries& expected_f1, const Rational& order);

// h_i = sum_j T(i, j) f_j. Throws std::invalid_argument unless T is k x k.
SeriesVector scale_by_matrix(const RationalMatrix& t, const SeriesVector& v);

} // namespace qseries
