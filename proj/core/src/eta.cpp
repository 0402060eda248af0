#include <qseries/eta.hpp>

#include <stdexcept>
#include <vector>

namespace qseries {

namespace {

void require_above(const Rational& order, const Rational& floor_value, const char* what)
{
    if (order <= floor_value) {
        throw std::invalid_argument(std::string(what) + ": order must be greater than " + to_string(floor_value));
    }
}

// Number of integer steps j >= 0 with j < span (span > 0).
std::size_t steps_below(const Rational& span)
{
    const auto n = ceil_int(span);
    return n > 0 ? static_cast<std::size_t>(n) : 0;
}

// Dense integer product prod (1 + sign * x^d) for the given steps d, truncated to `slots`.
std::vector<Integer> signed_product(std::size_t slots, const std::vector<std::size_t>& steps, int sign)
{
    std::vector<Integer> poly(slots);
    if (slots == 0) {
        return poly;
    }
    poly[0] = 1;
    for (const auto d : steps) {
        if (d >= slots) {
            continue;
        }
        for (std::size_t j = slots - 1; j >= d; --j) {
            if (sign > 0) {
                poly[j] += poly[j - d];
            } else {
                poly[j] -= poly[j - d];
            }
            if (j == d) {
                break;
            }
        }
    }
    return poly;
}

// Places dense coefficients c_j at index base + stride * j on the given grid.
QSeries from_dense(std::int64_t grid, std::int64_t base, std::int64_t stride, const std::vector<Integer>& dense,
                   const Rational& order)
{
    std::vector<Term> terms;
    for (std::size_t j = 0; j < dense.size(); ++j) {
        if (dense[j] != 0) {
            terms.push_back(Term{base + stride * static_cast<std::int64_t>(j), Rational(dense[j])});
        }
    }
    return QSeries::from_terms(grid, std::move(terms), order);
}

const Rational one_24 = make_rational(1, 24);
const Rational one_8 = make_rational(1, 8);
const Rational one_48 = make_rational(1, 48);

} // namespace

std::int64_t eta_factor_count(const Rational& order)
{
    // Factor i reaches exponent 1/24 + i, so it matters only when i < order - 1/24.
    const auto slots = ceil_int(order - one_24);
    return slots > 1 ? slots - 1 : 0;
}

std::int64_t pentagonal_index_bound(const Rational& order)
{
    const Rational span = order - one_24;
    std::int64_t n = 0;
    while (make_rational(3 * n * n - n, 2) < span) {
        ++n;
    }
    return n;
}

std::int64_t jacobi_index_bound(const Rational& order)
{
    const Rational span = order - one_8;
    std::int64_t m = 0;
    while (make_rational(m * (m + 1), 2) < span) {
        ++m;
    }
    return m;
}

QSeries eta_series(const Rational& order)
{
    require_above(order, one_24, "eta_series");
    const auto slots = steps_below(order - one_24);
    std::vector<std::size_t> steps;
    for (std::int64_t i = 1; i <= eta_factor_count(order); ++i) {
        steps.push_back(static_cast<std::size_t>(i));
    }
    return from_dense(24, 1, 24, signed_product(slots, steps, -1), order);
}

QSeries euler_product(const Rational& order)
{
    require_above(order, Rational(0), "euler_product");
    return shift(eta_series(order + one_24), -one_24);
}

QSeries eta_power(unsigned m, const Rational& order)
{
    if (m == 0) {
        throw std::invalid_argument("eta_power: exponent must be at least 1");
    }
    const Rational prefactor = make_rational(m, 24);
    require_above(order, prefactor, "eta_power");
    // eta known to 1/24 + r gives eta^m known to m/24 + r.
    return pow(eta_series(order - prefactor + one_24), m);
}

QSeries pentagonal_sum_series(const Rational& order)
{
    require_above(order, one_24, "pentagonal_sum_series");
    const auto bound = pentagonal_index_bound(order);
    std::vector<Term> terms;
    for (std::int64_t n = -bound; n <= bound; ++n) {
        const std::int64_t e = (3 * n * n - n) / 2;
        terms.push_back(Term{1 + 24 * e, Rational(n % 2 == 0 ? 1 : -1)});
    }
    return QSeries::from_terms(24, std::move(terms), order);
}

QSeries jacobi_cube_series(const Rational& order)
{
    require_above(order, one_8, "jacobi_cube_series");
    const auto bound = jacobi_index_bound(order);
    std::vector<Term> terms;
    for (std::int64_t m = 0; m < bound; ++m) {
        const std::int64_t e = m * (m + 1) / 2;
        terms.push_back(Term{1 + 8 * e, Rational((m % 2 == 0 ? 1 : -1) * (2 * m + 1))});
    }
    return QSeries::from_terms(8, std::move(terms), order);
}

QSeries eisenstein_g2(const Rational& order)
{
    require_above(order, Rational(0), "eisenstein_g2");
    const auto slots = steps_below(order);
    std::vector<std::int64_t> sigma(slots, 0);
    for (std::size_t d = 1; d < slots; ++d) {
        for (std::size_t m = d; m < slots; m += d) {
            sigma[m] += static_cast<std::int64_t>(d);
        }
    }
    std::vector<Term> terms;
    terms.push_back(Term{0, make_rational(-1, 12)});
    for (std::size_t m = 1; m < slots; ++m) {
        terms.push_back(Term{static_cast<std::int64_t>(m), Rational(Integer(static_cast<long>(2 * sigma[m])))});
    }
    return QSeries::from_terms(1, std::move(terms), order);
}

QSeries weber_series(WeberKind which, const Rational& order)
{
    // Work in half-integer steps: q^(j/2) sits at grid-48 index prefix + 24 j.
    const Rational prefactor = which == WeberKind::f2 ? one_24 : -one_48;
    require_above(order, prefactor, "weber_series");
    const auto slots = steps_below(2 * (order - prefactor));
    std::vector<std::size_t> steps;
    for (std::size_t d = which == WeberKind::f2 ? 2 : 1; d < slots; d += 2) {
        steps.push_back(d);
    }
    const int sign = which == WeberKind::f1 ? -1 : 1;
    const std::int64_t base = which == WeberKind::f2 ? 2 : -1;
    return from_dense(48, base, 24, signed_product(slots, steps, sign), order);
}

Rational named_series_prefactor(const NamedSeriesId& id)
{
    switch (id.kind) {
    case SeriesKind::eta:
    case SeriesKind::pentagonal_sum:
    case SeriesKind::weber_f2:
        return one_24;
    case SeriesKind::eta_power:
        return make_rational(id.power, 24);
    case SeriesKind::g2:
        return 0;
    case SeriesKind::weber_f:
    case SeriesKind::weber_f1:
        return -one_48;
    case SeriesKind::jacobi_cube_sum:
        return one_8;
    }
    throw std::logic_error("unknown series kind");
}

QSeries build_named_series(const NamedSeriesId& id, const Rational& order)
{
    switch (id.kind) {
    case SeriesKind::eta:
        return eta_series(order);
    case SeriesKind::eta_power:
        return eta_power(id.power, order);
    case SeriesKind::g2:
        return eisenstein_g2(order);
    case SeriesKind::weber_f:
        return weber_series(WeberKind::f, order);
    case SeriesKind::weber_f1:
        return weber_series(WeberKind::f1, order);
    case SeriesKind::weber_f2:
        return weber_series(WeberKind::f2, order);
    case SeriesKind::pentagonal_sum:
        return pentagonal_sum_series(order);
    case SeriesKind::jacobi_cube_sum:
        return jacobi_cube_series(order);
    }
    throw std::logic_error("unknown series kind");
}

SeriesKind parse_series_kind(std::string_view name)
{
    if (name == "eta") return SeriesKind::eta;
    if (name == "eta-power") return SeriesKind::eta_power;
    if (name == "g2") return SeriesKind::g2;
    if (name == "weber-f") return SeriesKind::weber_f;
    if (name == "weber-f1") return SeriesKind::weber_f1;
    if (name == "weber-f2") return SeriesKind::weber_f2;
    if (name == "pentagonal") return SeriesKind::pentagonal_sum;
    if (name == "jacobi-cube") return SeriesKind::jacobi_cube_sum;
    throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

std::string series_kind_name(SeriesKind kind)
{
    switch (kind) {
    case SeriesKind::eta: return "eta";
    case SeriesKind::eta_power: return "eta-power";
    case SeriesKind::g2: return "g2";
    case SeriesKind::weber_f: return "weber-f";
    case SeriesKind::weber_f1: return "weber-f1";
    case SeriesKind::weber_f2: return "weber-f2";
    case SeriesKind::pentagonal_sum: return "pentagonal";
    case SeriesKind::jacobi_cube_sum: return "jacobi-cube";
    }
    throw std::logic_error("unknown series kind");
}

} // namespace qseries
