#include <doctest.h>

#include <json.hpp>

#include <qseries/eta.hpp>
#include <qseries/macdonald.hpp>
#include <qseries/virasoro.hpp>

#include "support.hpp"

using namespace qseries;
using qseries::test::load_golden;
using qseries::test::q;

namespace {

Integer chi_d_of(int k, std::vector<std::int64_t> n) { return chi_d(k, n); }
Rational exponent_of(int k, std::vector<std::int64_t> n) { return lattice_exponent(k, n); }

} // namespace

TEST_CASE("chi_d")
{
    CHECK(chi_d_of(2, {0, 0}) == -8);
    CHECK(chi_d_of(2, {1, 0}) == 112);
    // The factors 2i-1 + n(4k+2) are odd with distinct residues up to sign, so no factor can vanish.
    for (std::int64_t a = -3; a <= 3; ++a)
        for (std::int64_t b = -3; b <= 3; ++b)
            for (std::int64_t c = -3; c <= 3; ++c) CHECK(chi_d_of(3, {a, b, c}) != 0);
    CHECK(chi_d_of(3, {0, 0, 0}) == Integer((1 - 9) * (1 - 25) * (9 - 25)));
}

TEST_CASE("lattice exponent")
{
    CHECK(exponent_of(2, {0, 0}) == q(1, 4));
    CHECK(exponent_of(2, {0, -1}) == q(5, 4));
    Rational best = exponent_of(2, {0, 0});
    for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t b = -2; b <= 2; ++b) {
            CHECK(exponent_of(2, {a, b}) >= best);
        }
}

TEST_CASE("c_k_constant")
{
    CHECK(c_k_constant(2) == q(-1, 8));
    CHECK(c_k_constant(3) == q(-1, 3072));
    for (int k = 2; k <= 8; ++k) {
        const auto c = c_k_constant(k);
        CHECK(c != 0);
        CHECK((c > 0) == ((k * (k - 1) / 2) % 2 == 0));
    }
    CHECK_THROWS(c_k_constant(1));
}

TEST_CASE("lattice enumeration")
{
    for (int k = 2; k <= 4; ++k) {
        const Rational order = 8;
        const Rational base = make_rational(2 * k * k - k, 24);
        const auto w = macdonald_window(k, order);
        // Every omitted coordinate value pushes the exponent to at least the order on its own.
        for (std::int64_t n : {w + 1, -(w + 1)}) {
            for (int i = 1; i <= k; ++i)
                CHECK(base + make_rational((2 * k + 1) * n * n + (2 * i - 1) * n, 2) >= order);
        }
        int visited = 0;
        for_each_macdonald_term(k, order, [&](const LatticeTerm& t) {
            ++visited;
            CHECK(t.exponent >= base);
            CHECK(t.exponent < order);
            CHECK(t.weight != 0);
            CHECK(t.exponent == lattice_exponent(k, t.n_vec));
        });
        CHECK(visited > 0);
    }
}

TEST_CASE("macdonald_rhs")
{
    const auto r2 = macdonald_rhs(2, 20);
    CHECK(r2.lowest_exponent() == q(1, 4));
    CHECK(r2.leading_coefficient() == c_k_constant(2) * -1 * -8);

    CHECK(equal_up_to(macdonald_rhs(2, 12), load_golden("macdonald_2_12.txt"), 12));
    CHECK(equal_up_to(macdonald_rhs(3, 12), load_golden("macdonald_3_12.txt"), 12));

    // Window soundness: a wider box never changes anything below the order.
    for (int k = 2; k <= 4; ++k) {
        const auto w = macdonald_window(k, 10);
        CHECK(macdonald_rhs(k, 10) == macdonald_rhs(k, 10, 2 * w));
    }
}

TEST_CASE("lattice sum constants for k = 2, 3, 4")
{
    // The printed normalization differs from the eta power by (-1)^{k(k-1)/2}.
    const int expected[3] = {-1, -1, 1};
    for (int k = 2; k <= 4; ++k) {
        const std::int64_t e = 2 * k * k - k;
        const Rational bound = 12 + make_rational(e, 24);
        const auto report = empirical_constant(eta_power(static_cast<unsigned>(e), bound), macdonald_rhs(k, bound), bound);
        CHECK(report.match);
        CHECK(report.constant_found == expected[k - 2]);
    }
}

TEST_CASE("general_rhs")
{
    CHECK(equal_up_to(general_rhs(make_model(2, 5), 12), load_golden("general_2_5_12.txt"), 12));
    CHECK(equal_up_to(general_rhs(make_model(3, 4), 6), load_golden("general_3_4_6.txt"), 6));

    const auto m25 = make_model(2, 5);
    const auto r = empirical_constant(eta_power(6, 20), general_rhs(m25, 20), 20);
    CHECK(r.match);
    const auto m34 = make_model(3, 4);
    const auto r34 = empirical_constant(eta_power(15, 15), general_rhs(m34, 15), 15);
    CHECK(r34.match);

    for (const auto& m : models_up_to(40)) {
        const auto w = general_window(m, 6);
        CHECK(general_rhs(m, 6) == general_rhs(m, 6, 2 * w + 1));
        for_each_general_term(m, 6, [&](const LatticeTerm& t) {
            CHECK(t.weight != 0);
            CHECK(t.exponent >= 0);
            CHECK(t.exponent < 6);
            for (std::size_t i = 0; i < t.n_vec.size(); ++i)
                for (std::size_t j = 0; j < i; ++j) CHECK(t.n_vec[i] != t.n_vec[j]);
        });
    }
}

TEST_CASE("s = 2 residue sum is a reindexed lattice sum")
{
    for (int k = 2; k <= 4; ++k) {
        const auto model = make_model(2, 2 * k + 1);
        const Rational bound = 10;
        const Rational prefactor = c_k_constant(k) * ((k * (k - 1) / 2) % 2 ? -1 : 1);
        const auto bare = scale(macdonald_rhs(k, bound), 1 / prefactor);
        const auto report = empirical_constant(bare, general_rhs(model, bound), bound);
        CHECK(report.match);
        CHECK(abs(report.constant_found) == 1);
    }
}

TEST_CASE("empirical_constant")
{
    const auto eta = eta_series(20);
    const auto same = empirical_constant(eta, eta, 20);
    CHECK(same.match);
    CHECK(same.constant_found == 1);
    CHECK_FALSE(same.first_mismatch_exponent);

    const auto tripled = empirical_constant(eta, scale(eta, 3), 20);
    CHECK(tripled.match);
    CHECK(tripled.constant_found == 3);

    const auto shifted = empirical_constant(eta, shift(eta, 1), 20);
    CHECK_FALSE(shifted.match);
    CHECK(*shifted.first_mismatch_exponent == q(1, 24));

    const auto bumped = empirical_constant(eta, add(eta, QSeries::monomial(1, 7, 20)), 20);
    CHECK_FALSE(bumped.match);
    CHECK(*bumped.first_mismatch_exponent == 7);
}

TEST_CASE("verify_identity")
{
    const auto weber = verify_identity({IdentityKind::weber, 0, 0, 0}, 20);
    CHECK(weber.match);
    CHECK(weber.constant_found == q(7, 256));

    const auto raw = verify_identity({IdentityKind::wronskian_raw, 0, 2, 5}, 20);
    CHECK(raw.match);
    CHECK(raw.constant_found != 0);

    const auto euler = verify_identity({IdentityKind::euler, 0, 0, 0}, 100);
    CHECK(euler.match);
    CHECK(euler.constant_found == 1);

    CHECK_THROWS_WITH(verify_identity({IdentityKind::macdonald, 1, 0, 0}, 10), doctest::Contains("euler"));
    CHECK_THROWS(verify_identity({IdentityKind::denominator, 0, 4, 6}, 10));
    CHECK(parse_identity_kind("wronskian-raw") == IdentityKind::wronskian_raw);
    CHECK(identity_kind_name(IdentityKind::wronskian_normalized) == "wronskian_normalized");
}

TEST_CASE("models with equal k give Wronskians against the same eta power")
{
    const auto mu = mu_count(9);
    for (auto [s, t] : mu.solutions) {
        const auto r = verify_identity({IdentityKind::wronskian_normalized, 0, s, t}, 6);
        CHECK(r.match);
        const auto d = verify_identity({IdentityKind::denominator, 0, s, t}, 6);
        CHECK(d.match);
    }
}

TEST_CASE("report serialization")
{
    const auto r = verify_identity({IdentityKind::macdonald, 2, 0, 0}, 10);
    CHECK(to_text_record(r) ==
          "identity=macdonald params=k=2 order=10 constant=-1 match=true first_mismatch=- terms_compared=" +
              std::to_string(r.terms_compared));

    const auto doc = nlohmann::json::parse(to_json(r));
    CHECK(doc["identity"] == "macdonald");
    CHECK(doc["params"]["k"] == 2);
    CHECK(doc["order"] == "10");
    CHECK(doc["constant"] == "-1");
    CHECK(doc["match"] == true);
    CHECK(doc["first_mismatch"].is_null());
    CHECK(doc["terms_compared"] == r.terms_compared);
    CHECK(doc.size() == 7);
}
