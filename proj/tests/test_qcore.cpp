#include <doctest.h>

#include <map>
#include <stdexcept>

#include <qseries/eta.hpp>
#include <qseries/qseries.hpp>

#include "support.hpp"

using namespace qseries;
using qseries::test::Gen;
using qseries::test::q;

namespace {

// Schoolbook product over a std::map, used as an oracle for mul.
std::map<Rational, Rational> naive_product(const QSeries& x, const QSeries& y, const Rational& bound)
{
    std::map<Rational, Rational> out;
    for (const auto& a : x.terms()) {
        for (const auto& b : y.terms()) {
            const Rational e = x.exponent_of(a) + y.exponent_of(b);
            if (e < bound) out[e] += a.coeff * b.coeff;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<Rational, Rational> as_map(const QSeries& x)
{
    std::map<Rational, Rational> out;
    for (const auto& t : x.terms()) out[x.exponent_of(t)] = t.coeff;
    return out;
}

bool no_stored_zeros(const QSeries& x)
{
    for (const auto& t : x.terms())
        if (t.coeff == 0) return false;
    return true;
}

bool below_precision(const QSeries& x)
{
    for (const auto& t : x.terms())
        if (x.exponent_of(t) >= x.precision()) return false;
    return true;
}

QSeries poly(std::initializer_list<std::pair<int, int>> terms, int precision)
{
    std::vector<Term> ts;
    for (auto [e, c] : terms) ts.push_back({e, Rational(c)});
    return QSeries::from_terms(1, ts, Rational(precision));
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(q(10, 5)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(floor_int(q(-1, 2)) == -1);
    CHECK(ceil_int(q(-1, 2)) == 0);
    CHECK(lcm_int(4, 6) == 12);
}

TEST_CASE("monomial")
{
    const auto one = QSeries::monomial(1, 0, 10);
    CHECK(one.size() == 1);
    CHECK(one.coefficient(0) == 1);
    CHECK(one.precision() == 10);

    const auto m = QSeries::monomial(1, q(1, 24), 5);
    CHECK(m.lowest_exponent() == q(1, 24));
    CHECK(m.grid_denominator() == 24);

    const auto z = QSeries::monomial(0, 3, 5);
    CHECK(z.is_zero());
    CHECK(z.precision() == 5);

    CHECK_THROWS_WITH(QSeries::monomial(1, 5, 5), "term beyond precision");
}

TEST_CASE("add")
{
    const auto x = poly({{0, 1}, {1, -1}}, 10);
    const auto y = poly({{1, 1}}, 8);
    const auto s = add(x, y);
    CHECK(s == QSeries::monomial(1, 0, 8));

    const auto h = QSeries::monomial(1, q(1, 2), 5) + QSeries::monomial(1, q(1, 3), 5);
    CHECK(h.grid_denominator() == 6);
    CHECK(h.size() == 2);

    const auto z = QSeries::zero(3);
    CHECK(add(x, z) == x.truncate(3));
}

TEST_CASE("mul")
{
    // (1 - q) * geometric series
    std::vector<Term> geo;
    for (int i = 0; i < 12; ++i) geo.push_back({i, 1});
    const auto g = QSeries::from_terms(1, geo, 12);
    const auto prod = mul(poly({{0, 1}, {1, -1}}, 12), g);
    CHECK(prod == QSeries::one(12));

    const auto e = QSeries::monomial(1, q(1, 24), 5);
    CHECK(mul(e, e) == QSeries::monomial(1, q(1, 12), q(5) + q(1, 24)));

    // First 10 Euler factors multiplied out by hand.
    QSeries acc = QSeries::one(10);
    for (int i = 1; i <= 10; ++i) acc = mul(acc, poly({{0, 1}, {i, -1}}, 10));
    CHECK(acc == poly({{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}}, 10));
}

TEST_CASE("mul precision follows the pessimistic rule")
{
    const auto x = QSeries::from_terms(2, {{1, 3}, {4, 1}}, q(7, 2));  // low 1/2, P 7/2
    const auto y = QSeries::from_terms(3, {{2, -1}}, 2);               // low 2/3, P 2
    const auto p = mul(x, y);
    CHECK(p.precision() == test::min_rational(q(7, 2) + q(2, 3), q(2) + q(1, 2)));

    const auto z = QSeries::zero(4);
    CHECK(mul(x, z).precision() == test::min_rational(q(7, 2) + 4, 4 + q(1, 2)));
}

TEST_CASE("invert")
{
    const auto inv = invert(poly({{0, 1}, {1, -1}}, 9));
    for (int i = 0; i < 9; ++i) CHECK(inv.coefficient(i) == 1);

    const auto m = invert(QSeries::monomial(1, q(1, 24), 5));
    CHECK(m.lowest_exponent() == q(-1, 24));
    CHECK(m.size() == 1);

    // Partition numbers, counted by brute-force enumeration of nonincreasing sequences.
    auto count = [](auto& self, int n, int max_part) -> int {
        if (n == 0) return 1;
        int total = 0;
        for (int p = std::min(n, max_part); p >= 1; --p) total += self(self, n - p, p);
        return total;
    };
    const auto pinv = invert(shift(eta_series(6), q(-1, 24)));
    for (int n = 0; n < 6; ++n) CHECK(pinv.coefficient(n) == count(count, n, n));
    CHECK(pinv.coefficient(5) == 7);

    CHECK_THROWS_WITH(invert(QSeries::zero(4)), "not invertible");
}

TEST_CASE("theta_derive")
{
    CHECK(theta_derive(QSeries::monomial(1, 3, 10)) == QSeries::monomial(3, 3, 10));
    CHECK(theta_derive(QSeries::one(10)).is_zero());
    CHECK(theta_derive(QSeries::monomial(1, q(1, 24), 2)) == QSeries::monomial(q(1, 24), q(1, 24), 2));
    CHECK(theta_derive(QSeries::one(10)).precision() == 10);
}

TEST_CASE("pow")
{
    const auto x = poly({{0, 1}, {1, 1}}, 10);
    CHECK(pow(x, 0) == QSeries::one(10));
    CHECK(pow(x, 2) == poly({{0, 1}, {1, 2}, {2, 1}}, 10));

    // Jacobi's sum evaluated directly: sum (-1)^m (2m+1) q^{m(m+1)/2}.
    const auto cube = shift(pow(eta_series(30), 3), q(-1, 8));
    for (int m = 0; m * (m + 1) / 2 < 29; ++m) CHECK(cube.coefficient(m * (m + 1) / 2) == (m % 2 ? -1 : 1) * (2 * m + 1));
    CHECK(cube.coefficient(2) == 0);
}

TEST_CASE("equal_up_to and first_difference")
{
    const auto one = QSeries::one(10);
    const auto bumped = poly({{0, 1}, {5, 1}}, 10);
    CHECK(equal_up_to(one, one, 10));
    CHECK(equal_up_to(one, bumped, 5));
    CHECK_FALSE(equal_up_to(one, bumped, 6));
    CHECK(*first_difference(one, bumped, 10) == 5);
    CHECK_THROWS_WITH(equal_up_to(one, bumped, 11), "insufficient precision");
    CHECK(equal_up_to(pentagonal_sum_series(50), eta_series(50), 50));
}

TEST_CASE("text serialization round trip")
{
    const auto x = QSeries::from_terms(6, {{-1, q(1, 2)}, {3, -4}}, q(5, 2));
    const std::string text = to_text(x);
    CHECK(text == "D=6 P=5/2\n-1/6 1/2\n1/2 -4\n");
    CHECK(from_text(text) == x);
    CHECK_THROWS(from_text("D=6 P=1\n2 1\n"));            // beyond precision
    CHECK_THROWS(from_text("D=2 P=5\n1/3 1\n"));          // off grid
    CHECK_THROWS(from_text("D=1 P=5\n2 1\n1 1\n"));       // not increasing
    CHECK_THROWS(from_text("D=1 P=5\n1 0\n"));            // stored zero
}

TEST_CASE("property: mul agrees with the schoolbook oracle")
{
    Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = gen.series(gen.integer(1, 6), gen.integer(-4, 4), 12, 6);
        const auto y = gen.series(gen.integer(1, 6), gen.integer(-4, 4), 12, 6);
        const auto p = mul(x, y);
        CHECK(as_map(p) == naive_product(x, y, p.precision()));
        CHECK(no_stored_zeros(p));
        CHECK(below_precision(p));
    }
}

TEST_CASE("property: ring axioms at truncation")
{
    Gen gen(12);
    for (int trial = 0; trial < 150; ++trial) {
        const auto grid = gen.integer(1, 4);
        const auto x = gen.series(grid, gen.integer(-2, 2), 10, 6);
        const auto y = gen.series(grid, gen.integer(-2, 2), 10, 6);
        const auto z = gen.series(grid, gen.integer(-2, 2), 10, 6);
        CHECK(add(x, y) == add(y, x));
        CHECK(add(add(x, y), z) == add(x, add(y, z)));
        CHECK(mul(x, y) == mul(y, x));

        const auto l = mul(mul(x, y), z);
        const auto r = mul(x, mul(y, z));
        const Rational b1 = test::min_rational(l.precision(), r.precision());
        CHECK(equal_up_to(l, r, b1));

        const auto d1 = mul(x, add(y, z));
        const auto d2 = add(mul(x, y), mul(x, z));
        const Rational b2 = test::min_rational(d1.precision(), d2.precision());
        CHECK(equal_up_to(d1, d2, b2));
        CHECK(no_stored_zeros(d1));
        CHECK(sub(x, x).is_zero());
    }
}

TEST_CASE("property: mul by inverse is one")
{
    Gen gen(13);
    for (int trial = 0; trial < 150; ++trial) {
        const auto x = gen.unit_series(gen.integer(1, 5), gen.integer(-5, 5), 14, 7);
        const auto inv = invert(x);
        CHECK(inv.lowest_exponent() == -x.lowest_exponent());
        const auto p = mul(x, inv);
        CHECK(p == QSeries::one(p.precision()));
        CHECK(p.precision() > 0);
    }
}

TEST_CASE("property: theta_derive is a derivation")
{
    Gen gen(14);
    for (int trial = 0; trial < 150; ++trial) {
        const auto x = gen.series(gen.integer(1, 6), gen.integer(-3, 3), 10, 6);
        const auto y = gen.series(gen.integer(1, 6), gen.integer(-3, 3), 10, 6);
        const auto lhs = theta_derive(mul(x, y));
        const auto rhs = add(mul(theta_derive(x), y), mul(x, theta_derive(y)));
        CHECK(equal_up_to(lhs, rhs, test::min_rational(lhs.precision(), rhs.precision())));
    }
}

TEST_CASE("property: precision soundness")
{
    // A pipeline rerun on longer inputs must agree below the shorter run's reported precision.
    Gen gen(15);
    for (int trial = 0; trial < 60; ++trial) {
        const auto grid = gen.integer(1, 4);
        const auto lo = gen.integer(-2, 2);
        const auto long_x = gen.unit_series(grid, lo, 24, 12);
        const auto long_y = gen.series(grid, gen.integer(0, 3), 24, 12);
        const Rational cut = make_rational(lo + 10, grid);
        const auto short_x = long_x.truncate(cut);
        const auto short_y = long_y.truncate(cut);

        auto pipeline = [](const QSeries& a, const QSeries& b) {
            return add(mul(invert(a), theta_derive(b)), pow(a, 3));
        };
        const auto s = pipeline(short_x, short_y);
        const auto l = pipeline(long_x, long_y);
        CHECK(l.precision() >= s.precision());
        CHECK(equal_up_to(s, l, s.precision()));
    }
}

TEST_CASE("property: serialization round trip")
{
    Gen gen(16);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = gen.series(gen.integer(1, 48), gen.integer(-30, 30), 60, 10);
        CHECK(from_text(to_text(x)) == x);
    }
}
