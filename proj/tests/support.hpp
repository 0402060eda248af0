#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <qseries/qseries.hpp>
#include <qseries/rational.hpp>

namespace qseries::test {

inline QSeries load_golden(const std::string& name)
{
    const std::string path = std::string(QSERIES_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing golden file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

inline Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

// Hand-rolled generators for property tests; fixed seeds keep failures reproducible.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Rational rational(std::int64_t span = 9, std::int64_t max_den = 5)
    {
        return make_rational(integer(-span, span), integer(1, max_den));
    }

    Rational nonzero_rational(std::int64_t span = 9, std::int64_t max_den = 5)
    {
        Rational r;
        do r = rational(span, max_den);
        while (r == 0);
        return r;
    }

    // Random sparse series on `grid` with exponents in [lo, lo + width) and precision lo + width.
    QSeries series(std::int64_t grid, std::int64_t lo_index, std::int64_t width_index, int max_terms)
    {
        std::vector<Term> terms;
        const int count = static_cast<int>(integer(0, max_terms));
        for (int i = 0; i < count; ++i) terms.push_back({lo_index + integer(0, width_index - 1), rational()});
        return QSeries::from_terms(grid, terms, make_rational(lo_index + width_index, grid));
    }

    // Like series() but with a guaranteed nonzero term at the lowest index.
    QSeries unit_series(std::int64_t grid, std::int64_t lo_index, std::int64_t width_index, int max_terms)
    {
        std::vector<Term> terms{{lo_index, nonzero_rational()}};
        const int count = static_cast<int>(integer(0, max_terms));
        for (int i = 0; i < count; ++i) terms.push_back({lo_index + 1 + integer(0, width_index - 2), rational()});
        return QSeries::from_terms(grid, terms, make_rational(lo_index + width_index, grid));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Rational min_rational(const Rational& a, const Rational& b) { return a < b ? a : b; }

} // namespace qseries::test
