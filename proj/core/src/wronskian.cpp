#include <qseries/wronskian.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace qseries {

namespace {

using SeriesMatrix = std::vector<std::vector<QSeries>>;

SeriesMatrix derivative_matrix(const SeriesVector& v)
{
    const auto k = v.size();
    SeriesMatrix m(k);
    for (std::size_t c = 0; c < k; ++c) {
        QSeries current = v[c];
        for (std::size_t r = 0; r < k; ++r) {
            if (r > 0) {
                current = theta_derive(current);
            }
            m[r].push_back(current);
        }
    }
    return m;
}

// Laplace expansion down column `col` over the remaining rows.
QSeries laplace(const SeriesMatrix& m, std::vector<std::size_t>& rows, std::size_t col)
{
    if (rows.size() == 1) {
        return m[rows.front()][col];
    }
    std::optional<QSeries> acc;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto row = rows[i];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        QSeries term = mul(m[row][col], laplace(m, rows, col + 1));
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(i), row);
        if (i % 2 == 1) {
            term = negate(term);
        }
        acc = acc ? add(*acc, term) : term;
    }
    return *acc;
}

// Lower bound on the valuation of every term of det(m[rows][cols]) when all entries are
// treated as O(q^lowest_exponent); used when the remaining block vanishes at its precision.
Rational vanishing_block_bound(const SeriesMatrix& m, std::size_t from)
{
    Rational bound = 0;
    for (std::size_t c = from; c < m.size(); ++c) {
        Rational low = m[from][c].lowest_exponent();
        for (std::size_t r = from + 1; r < m.size(); ++r) {
            low = std::min(low, m[r][c].lowest_exponent());
        }
        bound += low;
    }
    return bound;
}

QSeries eliminate(SeriesMatrix m, std::int64_t grid)
{
    const auto k = m.size();
    // Pull q^(s_c) out of every column so entries are power series with valuation >= 0.
    Rational total_shift = 0;
    for (std::size_t c = 0; c < k; ++c) {
        const Rational s = m[0][c].is_zero() ? Rational(0) : m[0][c].lowest_exponent();
        total_shift += s;
        for (std::size_t r = 0; r < k; ++r) {
            m[r][c] = shift(m[r][c], -s);
        }
    }

    bool negative = false;
    std::optional<QSeries> pivots;
    for (std::size_t p = 0; p < k; ++p) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Rational best_low;
        for (std::size_t r = p; r < k; ++r) {
            for (std::size_t c = p; c < k; ++c) {
                if (m[r][c].is_zero()) {
                    continue;
                }
                const Rational low = m[r][c].lowest_exponent();
                if (!best || low < best_low) {
                    best = {r, c};
                    best_low = low;
                }
            }
        }
        if (!best) {
            QSeries rest = QSeries::zero(vanishing_block_bound(m, p), grid);
            QSeries det = pivots ? mul(*pivots, rest) : rest;
            return shift(det, total_shift);
        }
        const auto [pr, pc] = *best;
        if (pr != p) {
            std::swap(m[pr], m[p]);
            negative = !negative;
        }
        if (pc != p) {
            for (auto& row : m) {
                std::swap(row[pc], row[p]);
            }
            negative = !negative;
        }
        const QSeries inverse = invert(m[p][p]);
        for (std::size_t r = p + 1; r < k; ++r) {
            const QSeries factor = mul(m[r][p], inverse);
            for (std::size_t c = p + 1; c < k; ++c) {
                m[r][c] = sub(m[r][c], mul(factor, m[p][c]));
            }
        }
        pivots = pivots ? mul(*pivots, m[p][p]) : m[p][p];
    }
    QSeries det = negative ? negate(*pivots) : *pivots;
    return shift(det, total_shift);
}

} // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1;
    }
    return out;
}

Rational determinant(const RationalMatrix& input)
{
    if (input.rows() != input.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    RationalMatrix m = input;
    const auto n = m.rows();
    Rational det = 1;
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t pivot = p;
        while (pivot < n && m(pivot, p) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != p) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(pivot, c), m(p, c));
            }
            det = -det;
        }
        det *= m(p, p);
        for (std::size_t r = p + 1; r < n; ++r) {
            if (m(r, p) == 0) {
                continue;
            }
            const Rational f = m(r, p) / m(p, p);
            for (std::size_t c = p; c < n; ++c) {
                m(r, c) -= f * m(p, c);
            }
        }
    }
    return det;
}

SeriesVector::SeriesVector(std::vector<QSeries> entries) : entries_(std::move(entries))
{
    if (entries_.empty()) {
        throw std::invalid_argument("series vector needs at least one entry");
    }
    for (const auto& e : entries_) {
        grid_ = lcm_int(grid_, e.grid_denominator());
    }
    precision_ = entries_.front().precision();
    for (auto& e : entries_) {
        e = e.regrid(grid_);
        precision_ = std::min(precision_, e.precision());
    }
}

Rational vandermonde(std::span<const Rational> xs)
{
    Rational out = 1;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            out *= xs[i] - xs[j];
        }
    }
    return out;
}

QSeries wronskian(const SeriesVector& v)
{
    const auto m = derivative_matrix(v);
    if (v.size() <= 4) {
        std::vector<std::size_t> rows(v.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            rows[i] = i;
        }
        return laplace(m, rows, 0);
    }
    return eliminate(m, v.grid_denominator());
}

QSeries wronskian_vandermonde_expand(const SeriesVector& v)
{
    const auto k = v.size();
    const auto grid = v.grid_denominator();

    Rational low_sum = 0;
    for (const auto& e : v.entries()) {
        low_sum += e.lowest_exponent();
    }
    // A tuple sum is exact while it stays below P_j + sum_{i != j} low_i for every j.
    Rational bound = v[0].precision() + low_sum - v[0].lowest_exponent();
    for (std::size_t j = 1; j < k; ++j) {
        bound = std::min(bound, Rational(v[j].precision() + low_sum - v[j].lowest_exponent()));
    }
    for (const auto& e : v.entries()) {
        if (e.is_zero()) {
            return QSeries::zero(bound, grid);
        }
    }
    const auto limit = ceil_int(bound * grid);

    // remaining_low[i] = sum of lowest indices of entries i..k-1
    std::vector<std::int64_t> remaining_low(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) {
        remaining_low[i] = remaining_low[i + 1] + v[i].terms().front().index;
    }

    std::map<std::int64_t, Rational> acc;
    std::vector<std::int64_t> chosen(k);
    std::vector<Rational> coeff_prefix(k + 1);
    coeff_prefix[0] = 1;

    auto recurse = [&](auto&& self, std::size_t depth, std::int64_t index_sum) -> void {
        if (depth == k) {
            Integer weight = 1;
            for (std::size_t i = 1; i < k; ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    weight *= static_cast<long>(chosen[i] - chosen[j]);
                }
            }
            if (weight != 0) {
                acc[index_sum] += coeff_prefix[k] * weight;
            }
            return;
        }
        for (const auto& term : v[depth].terms()) {
            const auto next = index_sum + term.index;
            if (next + remaining_low[depth + 1] >= limit) {
                break;
            }
            chosen[depth] = term.index;
            coeff_prefix[depth + 1] = coeff_prefix[depth] * term.coeff;
            self(self, depth + 1, next);
        }
    };
    recurse(recurse, 0, 0);

    // Exponents are index / grid, so the Vandermonde of exponents carries grid^(-k(k-1)/2).
    Integer scale_den;
    mpz_ui_pow_ui(scale_den.get_mpz_t(), static_cast<unsigned long>(grid), k * (k - 1) / 2);
    const Rational factor(Integer(1), scale_den);
    std::vector<Term> terms;
    for (auto& [index, c] : acc) {
        if (c != 0) {
            terms.push_back(Term{index, c * factor});
        }
    }
    return QSeries::from_terms(grid, std::move(terms), bound);
}

bool abel_log_derivative_check(const SeriesVector& v, const QSeries& expected_f1, const Rational& order)
{
    const auto w = wronskian(v);
    if (w.is_zero()) {
        throw std::domain_error("degenerate fundamental system");
    }
    const auto residual = add(theta_derive(w), mul(expected_f1, w));
    if (order > residual.precision()) {
        throw std::invalid_argument("insufficient precision");
    }
    return residual.is_zero() || residual.lowest_exponent() >= order;
}

SeriesVector scale_by_matrix(const RationalMatrix& t, const SeriesVector& v)
{
    const auto k = v.size();
    if (t.rows() != k || t.cols() != k) {
        throw std::invalid_argument("matrix size does not match the series vector");
    }
    std::vector<QSeries> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        QSeries row = scale(v[0], t(i, 0));
        for (std::size_t j = 1; j < k; ++j) {
            row = add(row, scale(v[j], t(i, j)));
        }
        out.push_back(std::move(row));
    }
    return SeriesVector(std::move(out));
}

} // namespace qseries
