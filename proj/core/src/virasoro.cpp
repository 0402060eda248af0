#include <qseries/virasoro.hpp>

#include <qseries/eta.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace qseries {

namespace {

const Rational one_24 = make_rational(1, 24);

std::string pair_text(int s, int t)
{
    return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

void require_order(const Rational& order, const Rational& floor_value, const char* what)
{
    if (order <= floor_value) {
        throw std::invalid_argument(std::string(what) + ": order must be greater than " + to_string(floor_value));
    }
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

MinimalModel make_model(int s, int t)
{
    if (s < 2 || t < 2 || s == t || std::gcd(s, t) != 1) {
        throw std::invalid_argument("not a minimal model: " + pair_text(s, t));
    }
    if (s > t) {
        std::swap(s, t);
    }
    MinimalModel model;
    model.s = s;
    model.t = t;
    model.k = (s - 1) * (t - 1) / 2;
    model.central_charge = 1 - make_rational(6 * (s - t) * (s - t), s * t);
    return model;
}

Rational conformal_weight(const MinimalModel& model, int m, int n)
{
    const std::int64_t a = static_cast<std::int64_t>(n) * model.s - static_cast<std::int64_t>(m) * model.t;
    const std::int64_t d = model.s - model.t;
    return make_rational(a * a - d * d, 4 * static_cast<std::int64_t>(model.s) * model.t);
}

WeightLabel make_label(const MinimalModel& model, int m, int n)
{
    if (m < 1 || m >= model.s || n < 1 || n >= model.t) {
        throw std::invalid_argument("label " + pair_text(m, n) + " outside the Kac table of "
                                    + pair_text(model.s, model.t));
    }
    WeightLabel label;
    label.m = m;
    label.n = n;
    label.h = conformal_weight(model, m, n);
    label.h_bar = label.h - model.central_charge / 24;
    return label;
}

std::vector<WeightLabel> distinct_weights(const MinimalModel& model)
{
    std::vector<WeightLabel> out;
    for (int m = 1; m < model.s && static_cast<int>(out.size()) < model.k; ++m) {
        for (int n = 1; n < model.t && static_cast<int>(out.size()) < model.k; ++n) {
            auto label = make_label(model, m, n);
            for (const auto& seen : out) {
                if (seen.h == label.h) {
                    throw std::logic_error("duplicate weight " + to_string(label.h) + " at "
                                           + pair_text(m, n) + " among the first k labels of "
                                           + pair_text(model.s, model.t));
                }
            }
            out.push_back(std::move(label));
        }
    }
    return out;
}

QSeries character_double_sum(const MinimalModel& model, const WeightLabel& label, const Rational& order)
{
    require_order(order, label.h_bar, "character_double_sum");
    const Rational span = order - label.h_bar;
    const std::int64_t st = static_cast<std::int64_t>(model.s) * model.t;
    const std::int64_t a = static_cast<std::int64_t>(label.n) * model.s - static_cast<std::int64_t>(label.m) * model.t;
    const std::int64_t b = static_cast<std::int64_t>(label.n) * model.s + static_cast<std::int64_t>(label.m) * model.t;
    const std::int64_t mn = static_cast<std::int64_t>(label.m) * label.n;

    // Both st r^2 - |a||r| and st r^2 - |b||r| + mn increase for |r| >= 1 since |a|, |b| < 2st.
    std::vector<Term> numerator{Term{0, Rational(1)}, Term{mn, Rational(-1)}};
    for (std::int64_t r = 1;; ++r) {
        const std::int64_t exps[4] = {st * r * r + r * a, st * r * r - r * a, st * r * r + r * b + mn,
                                      st * r * r - r * b + mn};
        if (span <= *std::min_element(std::begin(exps), std::end(exps))) {
            break;
        }
        numerator.push_back(Term{exps[0], Rational(1)});
        numerator.push_back(Term{exps[1], Rational(1)});
        numerator.push_back(Term{exps[2], Rational(-1)});
        numerator.push_back(Term{exps[3], Rational(-1)});
    }
    const auto sum = QSeries::from_terms(1, std::move(numerator), span);
    return shift(mul(sum, invert(euler_product(span))), label.h_bar);
}

int chi_indicator(const MinimalModel& model, const WeightLabel& label, std::int64_t r)
{
    const std::int64_t modulus = 2 * static_cast<std::int64_t>(model.s) * model.t;
    const std::int64_t a = static_cast<std::int64_t>(label.n) * model.s - static_cast<std::int64_t>(label.m) * model.t;
    const std::int64_t b = static_cast<std::int64_t>(label.n) * model.s + static_cast<std::int64_t>(label.m) * model.t;
    const auto rr = mod(r, modulus);
    const bool plus = rr == mod(a, modulus) || rr == mod(-a, modulus);
    const bool minus = rr == mod(b, modulus) || rr == mod(-b, modulus);
    if (plus && minus) {
        throw std::domain_error("degenerate chi");
    }
    return plus ? 1 : (minus ? -1 : 0);
}

std::vector<std::pair<std::int64_t, int>> chi_support(const MinimalModel& model, const WeightLabel& label)
{
    const std::int64_t modulus = 2 * static_cast<std::int64_t>(model.s) * model.t;
    const std::int64_t a = static_cast<std::int64_t>(label.n) * model.s - static_cast<std::int64_t>(label.m) * model.t;
    const std::int64_t b = static_cast<std::int64_t>(label.n) * model.s + static_cast<std::int64_t>(label.m) * model.t;
    std::vector<std::int64_t> residues{mod(a, modulus), mod(-a, modulus), mod(b, modulus), mod(-b, modulus)};
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    std::vector<std::pair<std::int64_t, int>> out;
    for (const auto rho : residues) {
        out.emplace_back(rho, chi_indicator(model, label, rho));
    }
    return out;
}

QSeries character_numerator(const MinimalModel& model, const WeightLabel& label, const Rational& order)
{
    const std::int64_t four_st = 4 * static_cast<std::int64_t>(model.s) * model.t;
    const Rational scaled = order * four_st; // r^2 < order * 4st
    std::vector<Term> terms;
    for (std::int64_t r = 0; r * r < scaled; ++r) {
        const int chi = chi_indicator(model, label, r);
        if (chi != 0) {
            terms.push_back(Term{r * r, Rational(chi)});
        }
    }
    return QSeries::from_terms(four_st, std::move(terms), order);
}

QSeries character_chi_form(const MinimalModel& model, const WeightLabel& label, const Rational& order)
{
    require_order(order, label.h_bar, "character_chi_form");
    const auto numerator = character_numerator(model, label, order + one_24);
    return mul(numerator, invert(eta_series(order - label.h_bar + one_24)));
}

QSeries character_product_2k1(int k, int i, const Rational& order)
{
    if (k < 1 || i < 1 || i > k) {
        throw std::invalid_argument("character_product_2k1 needs k >= 1 and 1 <= i <= k");
    }
    const auto model = make_model(2, 2 * k + 1);
    const auto label = make_label(model, 1, i);
    require_order(order, label.h_bar, "character_product_2k1");
    const Rational span = order - label.h_bar;
    const auto slots_signed = ceil_int(span);
    const auto slots = static_cast<std::size_t>(slots_signed > 0 ? slots_signed : 0);
    const std::int64_t modulus = 2 * k + 1;

    // Multiply 1 by each geometric series 1/(1 - q^n) in place.
    std::vector<Integer> dense(slots);
    if (slots > 0) {
        dense[0] = 1;
    }
    for (std::size_t n = 1; n < slots; ++n) {
        const auto residue = static_cast<std::int64_t>(n) % modulus;
        if (residue == 0 || residue == i || residue == modulus - i) {
            continue;
        }
        for (std::size_t j = n; j < slots; ++j) {
            dense[j] += dense[j - n];
        }
    }
    std::vector<Term> terms;
    for (std::size_t j = 0; j < slots; ++j) {
        if (dense[j] != 0) {
            terms.push_back(Term{static_cast<std::int64_t>(j), Rational(dense[j])});
        }
    }
    return shift(QSeries::from_terms(1, std::move(terms), span), label.h_bar);
}

QSeries normalized_character(const MinimalModel& model, const WeightLabel& label, const Rational& order)
{
    require_order(order, label.h_bar + one_24, "normalized_character");
    return mul(eta_series(order - label.h_bar), character_double_sum(model, label, order - one_24));
}

Rational strange_sum_2k1(int k)
{
    const auto model = make_model(2, 2 * k + 1);
    Rational sum = 0;
    for (int i = 1; i <= k; ++i) {
        sum += make_label(model, 1, i).h_bar;
    }
    return sum;
}

Rational strange_closed_form_2k1(int k)
{
    return make_rational(2 * static_cast<std::int64_t>(k) * (k - 1), 24);
}

Rational strange_sum_general(int s, int t)
{
    const auto model = make_model(s, t);
    Rational sum = 0;
    for (int m = 1; m < model.s; ++m) {
        for (int n = 1; n < model.t; ++n) {
            sum += make_label(model, m, n).h_bar;
        }
    }
    return sum / 2;
}

Rational strange_sum_distinct(const MinimalModel& model)
{
    Rational sum = 0;
    for (const auto& label : distinct_weights(model)) {
        sum += label.h_bar;
    }
    return sum;
}

Rational strange_closed_form_general(int s, int t)
{
    const std::int64_t ss = s;
    const std::int64_t tt = t;
    return make_rational((ss - 1) * (tt - 1) * (ss * tt - ss - tt - 1), 48);
}

Rational strange_closed_form_by_count(int s, int t)
{
    const std::int64_t a = static_cast<std::int64_t>(s - 1) * (t - 1) / 2;
    return make_rational(2 * a * (a - 1), 24);
}

MuCount mu_count(int k)
{
    MuCount out;
    const int target = 2 * k;
    for (int d = 1; d * d < target; ++d) {
        if (target % d != 0) {
            continue;
        }
        const int s = d + 1;
        const int t = target / d + 1;
        if (s < t && std::gcd(s, t) == 1) {
            out.solutions.emplace_back(s, t);
        }
    }
    out.count = static_cast<int>(out.solutions.size());
    return out;
}

std::vector<MinimalModel> models_up_to(int max_st)
{
    std::vector<MinimalModel> out;
    for (int s = 2; s * (s + 1) <= max_st; ++s) {
        for (int t = s + 1; s * t <= max_st; ++t) {
            if (std::gcd(s, t) == 1) {
                out.push_back(make_model(s, t));
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const MinimalModel& x, const MinimalModel& y) {
        return std::pair(x.s * x.t, x.s) < std::pair(y.s * y.t, y.s);
    });
    return out;
}

int normalized_coefficient_rank(const MinimalModel& model, const Rational& order)
{
    std::vector<QSeries> ys;
    std::set<Rational> exponents;
    for (const auto& label : distinct_weights(model)) {
        ys.push_back(normalized_character(model, label, order));
        for (const auto& t : ys.back().terms()) {
            exponents.insert(ys.back().exponent_of(t));
        }
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& y : ys) {
        std::vector<Rational> row;
        row.reserve(exponents.size());
        for (const auto& e : exponents) {
            row.push_back(y.coefficient(e));
        }
        rows.push_back(std::move(row));
    }
    const std::size_t columns = exponents.size();
    int rank = 0;
    for (std::size_t col = 0; col < columns && rank < static_cast<int>(rows.size()); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [col](const auto& r) { return r[col] != 0; });
        if (pivot == rows.end()) {
            continue;
        }
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const Rational f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < columns; ++c) {
                rows[r][c] -= f * rows[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace qseries
