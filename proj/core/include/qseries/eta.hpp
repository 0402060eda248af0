#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <qseries/qseries.hpp>

namespace qseries {

// Named modular objects. All builders take an absolute exponent bound `order`:
// the returned series has precision exactly `order`.

enum class SeriesKind { eta, eta_power, g2, weber_f, weber_f1, weber_f2, pentagonal_sum, jacobi_cube_sum };

struct NamedSeriesId {
    SeriesKind kind = SeriesKind::eta;
    unsigned power = 1; // only meaningful for eta_power, must be >= 1
};

enum class WeberKind { f, f1, f2 };

// q^(1/24) prod_{i>=1} (1 - q^i). Requires order > 1/24.
QSeries eta_series(const Rational& order);
// The Euler product prod_{i>=1} (1 - q^i). Requires order > 0.
QSeries euler_product(const Rational& order);
// eta^m with precision `order`. Requires m >= 1 and order > m/24.
QSeries eta_power(unsigned m, const Rational& order);
// q^(1/24) sum_n (-1)^n q^((3n^2 - n)/2). Requires order > 1/24.
QSeries pentagonal_sum_series(const Rational& order);
// q^(1/8) sum_{m>=0} (-1)^m (2m+1) q^(m(m+1)/2). Requires order > 1/8.
QSeries jacobi_cube_series(const Rational& order);
// -1/12 + 2 sum_{n>=1} n q^n / (1 - q^n), expanded through divisor sums. Requires order > 0.
QSeries eisenstein_g2(const Rational& order);
// Weber's functions on grid 48:
//   f  = q^(-1/48) prod_{n>=0} (1 + q^(n+1/2))
//   f1 = q^(-1/48) prod_{n>=0} (1 - q^(n+1/2))
//   f2 = q^(1/24)  prod_{n>=0} (1 + q^(n+1))
QSeries weber_series(WeberKind which, const Rational& order);

QSeries build_named_series(const NamedSeriesId& id, const Rational& order);
// Lowest exponent of the named series; builders require order above it.
Rational named_series_prefactor(const NamedSeriesId& id);

// "eta", "eta-power", "g2", "weber-f", "weber-f1", "weber-f2", "pentagonal", "jacobi-cube".
SeriesKind parse_series_kind(std::string_view name);
std::string series_kind_name(SeriesKind kind);

// Truncation audit: how much of each infinite object a builder uses.
// Number of Euler factors (1 - q^i) that can touch exponents below `order`.
std::int64_t eta_factor_count(const Rational& order);
// Least n >= 0 such that every |n'| >= n has (3n'^2 - |n'|)/2 >= order - 1/24.
std::int64_t pentagonal_index_bound(const Rational& order);
// Least m >= 0 with m(m+1)/2 >= order - 1/8.
std::int64_t jacobi_index_bound(const Rational& order);

} // namespace qseries
