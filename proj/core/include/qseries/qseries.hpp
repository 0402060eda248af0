#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <qseries/rational.hpp>

namespace qseries {

// One stored term: coeff * q^(index / grid).
struct Term {
    std::int64_t index;
    Rational coeff;
};

// A truncated formal series sum_k c_k q^(k/D) with exact rational coefficients.
//
// Every coefficient of an exponent strictly below precision() is known exactly;
// nothing is known at or beyond it. Terms are kept sorted by index with no zero
// coefficients and nothing stored at or beyond the precision bound. The zero
// series has no terms; for precision propagation its lowest exponent is its
// precision.
//
// Values are immutable once built; all operations return new series.
class QSeries
{
public:
    // Zero series, grid 1, precision 0.
    QSeries();

    static QSeries zero(const Rational& precision, std::int64_t grid = 1);
    static QSeries one(const Rational& precision);
    // c * q^e + O(q^precision). Throws std::invalid_argument("term beyond precision")
    // when c != 0 and precision <= e.
    static QSeries monomial(const Rational& c, const Rational& e, const Rational& precision);
    // Builds from unsorted terms on the given grid: duplicates are summed, zeros and
    // terms at or beyond the precision are dropped.
    static QSeries from_terms(std::int64_t grid, std::vector<Term> terms, const Rational& precision);

    std::int64_t grid_denominator() const noexcept { return grid_; }
    const Rational& precision() const noexcept { return precision_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Index of the lowest stored term (the offset a); for the zero series, the
    // first grid index at or above the precision.
    std::int64_t offset() const;
    Rational exponent_of(const Term& term) const;
    // Exponent of the lowest term, or the precision for the zero series.
    Rational lowest_exponent() const;
    // Coefficient of the lowest term; 0 for the zero series.
    Rational leading_coefficient() const;
    // Coefficient of q^e. Throws std::invalid_argument if e >= precision().
    Rational coefficient(const Rational& e) const;

    // Same series on a finer grid; new_grid must be a multiple of the current grid.
    QSeries regrid(std::int64_t new_grid) const;
    // Drops knowledge at and above the new precision (which must not exceed the current one).
    QSeries truncate(const Rational& new_precision) const;

    friend bool operator==(const QSeries& x, const QSeries& y);

private:
    QSeries(std::int64_t grid, std::vector<Term> terms, Rational precision);

    std::int64_t grid_ = 1;
    std::vector<Term> terms_;
    Rational precision_;

    friend QSeries add(const QSeries&, const QSeries&);
    friend QSeries negate(const QSeries&);
    friend QSeries scale(const QSeries&, const Rational&);
    friend QSeries mul(const QSeries&, const QSeries&);
    friend QSeries invert(const QSeries&);
    friend QSeries theta_derive(const QSeries&);
    friend QSeries shift(const QSeries&, const Rational&);
};

QSeries add(const QSeries& x, const QSeries& y);
QSeries sub(const QSeries& x, const QSeries& y);
QSeries negate(const QSeries& x);
QSeries scale(const QSeries& x, const Rational& c);
// Cauchy product. Precision is min(P_x + low(y), P_y + low(x)).
QSeries mul(const QSeries& x, const QSeries& y);
// Multiplicative inverse of a series with a nonzero lowest term.
// Throws std::domain_error("not invertible") for a series that is zero at its precision.
QSeries invert(const QSeries& x);
// The derivation q d/dq: c q^e -> (c e) q^e.
QSeries theta_derive(const QSeries& x);
// Repeated q d/dq.
QSeries theta_derive(const QSeries& x, int times);
// Binary powering; pow(x, 0) is 1 at x's precision.
QSeries pow(const QSeries& x, unsigned n);
// Exact multiplication by q^e (precision shifts by e as well).
QSeries shift(const QSeries& x, const Rational& e);

// True iff all coefficients of exponents < bound agree. Throws std::invalid_argument
// ("insufficient precision") when bound exceeds either precision.
bool equal_up_to(const QSeries& x, const QSeries& y, const Rational& bound);
// Lowest exponent below bound where x and y differ, if any.
std::optional<Rational> first_difference(const QSeries& x, const QSeries& y, const Rational& bound);

inline QSeries operator+(const QSeries& x, const QSeries& y) { return add(x, y); }
inline QSeries operator-(const QSeries& x, const QSeries& y) { return sub(x, y); }
inline QSeries operator-(const QSeries& x) { return negate(x); }
inline QSeries operator*(const QSeries& x, const QSeries& y) { return mul(x, y); }
inline QSeries operator*(const Rational& c, const QSeries& x) { return scale(x, c); }

// Text interchange format: a header line "D=<int> P=<rational>" followed by one
// "<exponent> <coefficient>" line per term in increasing exponent order.
std::string to_text(const QSeries& x);
// Inverse of to_text. Throws std::invalid_argument on malformed input.
QSeries from_text(const std::string& text);

} // namespace qseries
