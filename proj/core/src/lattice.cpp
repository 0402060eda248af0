#include <qseries/macdonald.hpp>

#include <algorithm>
#include <stdexcept>

namespace qseries {

Integer chi_d(int k, std::span<const std::int64_t> n_vec)
{
    if (n_vec.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("chi_d: n_vec must have k entries");
    }
    const std::int64_t stride = 4 * static_cast<std::int64_t>(k) + 2;
    Integer out = 1;
    for (int i = 1; i <= k; ++i) {
        const Integer xi = Integer(static_cast<long>(2 * i - 1)) + Integer(static_cast<long>(n_vec[i - 1])) * stride;
        for (int j = i + 1; j <= k; ++j) {
            const Integer xj
                = Integer(static_cast<long>(2 * j - 1)) + Integer(static_cast<long>(n_vec[j - 1])) * stride;
            out *= xi * xi - xj * xj;
        }
    }
    return out;
}

namespace {

// 2 * (contribution of coordinate i): (2k+1) n^2 + (2i-1) n, always even.
std::int64_t twice_contribution(int k, int i, std::int64_t n)
{
    return (2 * static_cast<std::int64_t>(k) + 1) * n * n + (2 * static_cast<std::int64_t>(i) - 1) * n;
}

Rational macdonald_base(int k)
{
    return make_rational(2 * static_cast<std::int64_t>(k) * k - k, 24);
}

} // namespace

Rational lattice_exponent(int k, std::span<const std::int64_t> n_vec)
{
    if (n_vec.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("lattice_exponent: n_vec must have k entries");
    }
    std::int64_t twice = 0;
    for (int i = 1; i <= k; ++i) {
        twice += twice_contribution(k, i, n_vec[i - 1]);
    }
    return macdonald_base(k) + make_rational(twice, 2);
}

Rational c_k_constant(int k)
{
    if (k < 2) {
        throw std::invalid_argument("c_k_constant requires k >= 2");
    }
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k) * (k - 1));
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            den *= static_cast<long>((i - j) * (i + j - 1));
        }
    }
    Rational out(Integer(1), den);
    out.canonicalize();
    return out;
}

std::int64_t macdonald_window(int k, const Rational& order)
{
    // Each coordinate contributes at least ((2k+1)n^2 - (2k-1)|n|)/2 >= 0.
    const Rational span = order - macdonald_base(k);
    std::int64_t w = 0;
    while (true) {
        const std::int64_t n = w + 1;
        const Rational least = make_rational((2 * static_cast<std::int64_t>(k) + 1) * n * n
                                                 - (2 * static_cast<std::int64_t>(k) - 1) * n,
                                             2);
        if (least >= span) {
            return w;
        }
        ++w;
    }
}

void for_each_macdonald_term(int k, const Rational& order, const std::function<void(const LatticeTerm&)>& visit,
                             std::optional<std::int64_t> window)
{
    if (k < 2) {
        throw std::invalid_argument("the lattice sum needs k >= 2");
    }
    const auto w = window.value_or(macdonald_window(k, order));
    const Rational base = macdonald_base(k);
    // Exponent test in halves: 2 * (order - base) against the running sum of twice_contribution.
    const Rational twice_span = 2 * (order - base);
    const Rational prefactor = c_k_constant(k) * ((k * (k - 1) / 2) % 2 == 0 ? 1 : -1);

    std::vector<std::int64_t> n_vec(static_cast<std::size_t>(k));
    auto recurse = [&](auto&& self, int depth, std::int64_t twice, std::int64_t parity) -> void {
        if (twice >= twice_span) {
            return; // every coordinate contributes >= 0
        }
        if (depth == k) {
            const Integer chi = chi_d(k, n_vec);
            if (chi == 0) {
                return;
            }
            LatticeTerm term;
            term.n_vec = n_vec;
            term.exponent = base + make_rational(twice, 2);
            term.weight = prefactor * Rational(chi) * (parity % 2 == 0 ? 1 : -1);
            visit(term);
            return;
        }
        for (std::int64_t n = -w; n <= w; ++n) {
            n_vec[static_cast<std::size_t>(depth)] = n;
            self(self, depth + 1, twice + twice_contribution(k, depth + 1, n), parity + (n < 0 ? -n : n));
        }
    };
    recurse(recurse, 0, 0, 0);
}

QSeries macdonald_rhs(int k, const Rational& order, std::optional<std::int64_t> window)
{
    if (k < 2) {
        throw std::invalid_argument("macdonald_rhs requires k >= 2");
    }
    if (order <= macdonald_base(k)) {
        throw std::invalid_argument("macdonald_rhs: order must be greater than " + to_string(macdonald_base(k)));
    }
    std::vector<Term> terms;
    for_each_macdonald_term(
        k, order,
        [&terms](const LatticeTerm& t) {
            terms.push_back(Term{to_int64(Rational(t.exponent * 24).get_num()), t.weight});
        },
        window);
    return QSeries::from_terms(24, std::move(terms), order);
}

std::int64_t general_window(const MinimalModel& model, const Rational& order)
{
    const Rational scaled = order * (4 * static_cast<std::int64_t>(model.s) * model.t);
    std::int64_t n = 0;
    while (n * n < scaled) {
        ++n;
    }
    return n;
}

namespace {

struct Candidate {
    std::int64_t n;
    std::int64_t square;
    int sign;
};

} // namespace

void for_each_general_term(const MinimalModel& model, const Rational& order,
                           const std::function<void(const LatticeTerm&)>& visit, std::optional<std::int64_t> window)
{
    const auto labels = distinct_weights(model);
    const auto k = labels.size();
    const std::int64_t four_st = 4 * static_cast<std::int64_t>(model.s) * model.t;
    const std::int64_t modulus = four_st / 2;
    const auto limit = ceil_int(order * four_st); // sum of squares must stay below this
    const auto w = window.value_or(general_window(model, order));

    std::vector<std::vector<Candidate>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& [rho, sign] : chi_support(model, labels[i])) {
            for (std::int64_t n = rho; n <= w && n * n < limit; n += modulus) {
                candidates[i].push_back(Candidate{n, n * n, sign});
            }
        }
        std::sort(candidates[i].begin(), candidates[i].end(),
                  [](const Candidate& a, const Candidate& b) { return a.n < b.n; });
    }
    // min_rest[i] = smallest possible sum of squares over coordinates i..k-1
    std::vector<std::int64_t> min_rest(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) {
        if (candidates[i].empty()) {
            return; // some factor chi_i vanishes on the whole window
        }
        min_rest[i] = min_rest[i + 1] + candidates[i].front().square;
    }

    std::vector<std::int64_t> n_vec(k);
    std::vector<std::int64_t> squares(k);
    std::vector<Integer> partial(k + 1);
    partial[0] = 1;
    auto recurse = [&](auto&& self, std::size_t depth, std::int64_t sum) -> void {
        if (depth == k) {
            LatticeTerm term;
            term.n_vec = n_vec;
            term.exponent = make_rational(sum, four_st);
            term.weight = Rational(partial[k]);
            visit(term);
            return;
        }
        for (const auto& c : candidates[depth]) {
            if (sum + c.square + min_rest[depth + 1] >= limit) {
                break;
            }
            Integer factor = c.sign;
            bool vanishes = false;
            for (std::size_t j = 0; j < depth; ++j) {
                const std::int64_t diff = c.square - squares[j];
                if (diff == 0) {
                    vanishes = true;
                    break;
                }
                factor *= static_cast<long>(diff);
            }
            if (vanishes) {
                continue;
            }
            n_vec[depth] = c.n;
            squares[depth] = c.square;
            partial[depth + 1] = partial[depth] * factor;
            self(self, depth + 1, sum + c.square);
        }
    };
    recurse(recurse, 0, 0);
}

QSeries general_rhs(const MinimalModel& model, const Rational& order, std::optional<std::int64_t> window)
{
    if (order <= 0) {
        throw std::invalid_argument("general_rhs: order must be greater than 0");
    }
    const std::int64_t four_st = 4 * static_cast<std::int64_t>(model.s) * model.t;
    const auto limit = ceil_int(order * four_st);
    std::vector<Integer> dense(static_cast<std::size_t>(limit));
    for_each_general_term(
        model, order,
        [&dense, four_st](const LatticeTerm& t) {
            const auto idx = to_int64(Rational(t.exponent * four_st).get_num());
            dense[static_cast<std::size_t>(idx)] += t.weight.get_num();
        },
        window);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) {
            terms.push_back(Term{static_cast<std::int64_t>(i), Rational(dense[i])});
        }
    }
    return QSeries::from_terms(four_st, std::move(terms), order);
}

} // namespace qseries
