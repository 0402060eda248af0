#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <qseries/qseries.hpp>

namespace qseries {

// A (s, t) minimal model in canonical order s < t, gcd(s, t) = 1.
struct MinimalModel {
    int s = 0;
    int t = 0;
    int k = 0;                // number of distinct weights, (s-1)(t-1)/2
    Rational central_charge;  // 1 - 6 (s-t)^2 / (s t)

    friend bool operator==(const MinimalModel&, const MinimalModel&) = default;
};

// A Kac label (m, n) with 1 <= m < s, 1 <= n < t.
struct WeightLabel {
    int m = 0;
    int n = 0;
    Rational h;      // ((n s - m t)^2 - (s - t)^2) / (4 s t)
    Rational h_bar;  // h - c/24

    friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
};

// Throws std::invalid_argument("not a minimal model") unless s, t >= 2, s != t, gcd = 1.
// The pair is swapped so that s < t.
MinimalModel make_model(int s, int t);

Rational conformal_weight(const MinimalModel& model, int m, int n);
// Throws std::invalid_argument when (m, n) is outside 1 <= m < s, 1 <= n < t.
WeightLabel make_label(const MinimalModel& model, int m, int n);

// The first k labels of the row-major sequence (1,1), (1,2), ..., (s-1,t-1).
// Throws std::logic_error if two of them share a weight.
std::vector<WeightLabel> distinct_weights(const MinimalModel& model);

// Double sum over r in Z divided by the Euler product, times q^(h - c/24).
// Requires order > h - c/24.
QSeries character_double_sum(const MinimalModel& model, const WeightLabel& label, const Rational& order);

// +1 on r = +-(ns - mt) mod 2st, -1 on r = +-(ns + mt) mod 2st, 0 otherwise.
// Throws std::domain_error("degenerate chi") if r falls in both classes.
int chi_indicator(const MinimalModel& model, const WeightLabel& label, std::int64_t r);

// Residues rho in [0, 2st) with chi(rho) != 0, paired with the sign, ascending.
std::vector<std::pair<std::int64_t, int>> chi_support(const MinimalModel& model, const WeightLabel& label);

// sum_{r>=0} chi(r) q^(r^2 / 4st), the numerator of the single-sum form, on grid 4st.
QSeries character_numerator(const MinimalModel& model, const WeightLabel& label, const Rational& order);

// character_numerator / eta. Requires order > h - c/24.
QSeries character_chi_form(const MinimalModel& model, const WeightLabel& label, const Rational& order);

// q^(h - c/24) prod_{n != 0, +-i mod 2k+1} 1/(1 - q^n) for the (2, 2k+1) model, label (1, i).
// Requires k >= 1, 1 <= i <= k, order > h - c/24.
QSeries character_product_2k1(int k, int i, const Rational& order);

// eta * character. Requires order > h - c/24 + 1/24.
QSeries normalized_character(const MinimalModel& model, const WeightLabel& label, const Rational& order);

// Sum of h_bar over the k weights of the (2, 2k+1) model.
Rational strange_sum_2k1(int k);
// 2k(k-1)/24.
Rational strange_closed_form_2k1(int k);
// Half the sum of h_bar over every Kac label (m, n) of the (s, t) model.
Rational strange_sum_general(int s, int t);
// Sum of h_bar over distinct_weights(model).
Rational strange_sum_distinct(const MinimalModel& model);
// (s-1)(t-1)(st-s-t-1)/48.
Rational strange_closed_form_general(int s, int t);
// 2a(a-1)/24 with a = (s-1)(t-1)/2.
Rational strange_closed_form_by_count(int s, int t);

struct MuCount {
    int count = 0;
    std::vector<std::pair<int, int>> solutions; // (s, t), s ascending
};

// Coprime pairs 2 <= s < t with (s-1)(t-1) = 2k.
MuCount mu_count(int k);

// Every canonical coprime pair with s * t <= max_st, ordered by (s*t, s).
std::vector<MinimalModel> models_up_to(int max_st);

// Rank of the coefficient matrix of the k normalized characters, one row per character and
// one column per exponent below `order` where any of them has a nonzero coefficient.
int normalized_coefficient_rank(const MinimalModel& model, const Rational& order);

} // namespace qseries
