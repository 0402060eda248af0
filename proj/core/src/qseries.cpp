#include <qseries/qseries.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qseries {

namespace {

// Number of grid indices k with k / grid < precision, counted from -infinity:
// every stored index must be strictly below this limit.
std::int64_t index_limit(const Rational& precision, std::int64_t grid)
{
    return ceil_int(precision * grid);
}

Integer lcm_of_denominators(std::span<const Term> terms)
{
    Integer out = 1;
    for (const auto& t : terms) {
        mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    return out;
}

// Coefficients scaled to integers by a common denominator.
std::vector<Integer> integer_numerators(std::span<const Term> terms, const Integer& den)
{
    std::vector<Integer> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        Integer v = den / t.coeff.get_den();
        v *= t.coeff.get_num();
        out.push_back(std::move(v));
    }
    return out;
}

std::int64_t step_gcd(std::span<const Term> terms, std::int64_t mult)
{
    std::int64_t g = 0;
    for (const auto& t : terms) {
        g = gcd_int(g, (t.index - terms.front().index) * mult);
    }
    return g;
}

} // namespace

QSeries::QSeries() = default;

QSeries::QSeries(std::int64_t grid, std::vector<Term> terms, Rational precision)
    : grid_(grid), terms_(std::move(terms)), precision_(std::move(precision))
{
}

QSeries QSeries::zero(const Rational& precision, std::int64_t grid)
{
    if (grid <= 0) {
        throw std::invalid_argument("grid denominator must be positive");
    }
    return QSeries(grid, {}, precision);
}

QSeries QSeries::one(const Rational& precision)
{
    return monomial(1, 0, precision);
}

QSeries QSeries::monomial(const Rational& c, const Rational& e, const Rational& precision)
{
    const auto grid = to_int64(e.get_den());
    if (c == 0) {
        return QSeries(grid, {}, precision);
    }
    if (precision <= e) {
        throw std::invalid_argument("term beyond precision");
    }
    return QSeries(grid, {Term{to_int64(e.get_num()), c}}, precision);
}

QSeries QSeries::from_terms(std::int64_t grid, std::vector<Term> terms, const Rational& precision)
{
    if (grid <= 0) {
        throw std::invalid_argument("grid denominator must be positive");
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    const auto limit = index_limit(precision, grid);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (t.index >= limit) {
            break;
        }
        if (!out.empty() && out.back().index == t.index) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) {
                out.pop_back();
            }
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) {
        out.pop_back();
    }
    return QSeries(grid, std::move(out), precision);
}

std::int64_t QSeries::offset() const
{
    return terms_.empty() ? index_limit(precision_, grid_) : terms_.front().index;
}

Rational QSeries::exponent_of(const Term& term) const
{
    return make_rational(term.index, grid_);
}

Rational QSeries::lowest_exponent() const
{
    return terms_.empty() ? precision_ : exponent_of(terms_.front());
}

Rational QSeries::leading_coefficient() const
{
    return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

Rational QSeries::coefficient(const Rational& e) const
{
    if (e >= precision_) {
        throw std::invalid_argument("insufficient precision");
    }
    const Rational scaled = e * grid_;
    if (scaled.get_den() != 1) {
        return 0;
    }
    const auto idx = to_int64(scaled.get_num());
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                               [](const Term& t, std::int64_t v) { return t.index < v; });
    return (it != terms_.end() && it->index == idx) ? it->coeff : Rational(0);
}

QSeries QSeries::regrid(std::int64_t new_grid) const
{
    if (new_grid <= 0 || new_grid % grid_ != 0) {
        throw std::invalid_argument("new grid must be a positive multiple of the current grid");
    }
    const auto mult = new_grid / grid_;
    std::vector<Term> out = terms_;
    for (auto& t : out) {
        t.index *= mult;
    }
    return QSeries(new_grid, std::move(out), precision_);
}

QSeries QSeries::truncate(const Rational& new_precision) const
{
    if (new_precision > precision_) {
        throw std::invalid_argument("insufficient precision");
    }
    const auto limit = index_limit(new_precision, grid_);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.index >= limit) {
            break;
        }
        out.push_back(t);
    }
    return QSeries(grid_, std::move(out), new_precision);
}

bool operator==(const QSeries& x, const QSeries& y)
{
    if (x.precision_ != y.precision_ || x.terms_.size() != y.terms_.size()) {
        return false;
    }
    const auto grid = lcm_int(x.grid_, y.grid_);
    const auto mx = grid / x.grid_;
    const auto my = grid / y.grid_;
    for (std::size_t i = 0; i < x.terms_.size(); ++i) {
        if (x.terms_[i].index * mx != y.terms_[i].index * my || x.terms_[i].coeff != y.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

QSeries add(const QSeries& x, const QSeries& y)
{
    const auto grid = lcm_int(x.grid_, y.grid_);
    const auto mx = grid / x.grid_;
    const auto my = grid / y.grid_;
    const Rational precision = std::min(x.precision_, y.precision_);
    const auto limit = index_limit(precision, grid);

    std::vector<Term> out;
    out.reserve(x.terms_.size() + y.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.terms_.size() || j < y.terms_.size()) {
        const auto xi = i < x.terms_.size() ? x.terms_[i].index * mx : limit;
        const auto yj = j < y.terms_.size() ? y.terms_[j].index * my : limit;
        const auto idx = std::min(xi, yj);
        if (idx >= limit) {
            break;
        }
        if (xi == yj) {
            Rational c = x.terms_[i].coeff + y.terms_[j].coeff;
            if (c != 0) {
                out.push_back(Term{idx, std::move(c)});
            }
            ++i;
            ++j;
        } else if (xi < yj) {
            out.push_back(Term{idx, x.terms_[i].coeff});
            ++i;
        } else {
            out.push_back(Term{idx, y.terms_[j].coeff});
            ++j;
        }
    }
    return QSeries(grid, std::move(out), precision);
}

QSeries negate(const QSeries& x)
{
    std::vector<Term> out = x.terms_;
    for (auto& t : out) {
        t.coeff = -t.coeff;
    }
    return QSeries(x.grid_, std::move(out), x.precision_);
}

QSeries sub(const QSeries& x, const QSeries& y)
{
    return add(x, negate(y));
}

QSeries scale(const QSeries& x, const Rational& c)
{
    if (c == 0) {
        return QSeries(x.grid_, {}, x.precision_);
    }
    std::vector<Term> out = x.terms_;
    for (auto& t : out) {
        t.coeff *= c;
    }
    return QSeries(x.grid_, std::move(out), x.precision_);
}

QSeries mul(const QSeries& x, const QSeries& y)
{
    const auto grid = lcm_int(x.grid_, y.grid_);
    const Rational precision
        = std::min(Rational(x.precision_ + y.lowest_exponent()), Rational(y.precision_ + x.lowest_exponent()));
    if (x.is_zero() || y.is_zero()) {
        return QSeries(grid, {}, precision);
    }
    const auto mx = grid / x.grid_;
    const auto my = grid / y.grid_;
    const auto limit = index_limit(precision, grid);
    const auto base = x.terms_.front().index * mx + y.terms_.front().index * my;
    if (base >= limit) {
        return QSeries(grid, {}, precision);
    }

    const Integer dx = lcm_of_denominators(x.terms_);
    const Integer dy = lcm_of_denominators(y.terms_);
    const auto xs = integer_numerators(x.terms_, dx);
    const auto ys = integer_numerators(y.terms_, dy);
    const Integer den = dx * dy;

    std::vector<std::int64_t> xi(x.terms_.size());
    std::vector<std::int64_t> yi(y.terms_.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        xi[i] = x.terms_[i].index * mx;
    }
    for (std::size_t j = 0; j < yi.size(); ++j) {
        yi[j] = y.terms_[j].index * my;
    }

    // All product indices lie on base + step * Z.
    std::int64_t step = gcd_int(step_gcd(x.terms_, mx), step_gcd(y.terms_, my));
    if (step == 0) {
        step = 1;
    }
    const auto slots = static_cast<std::size_t>((limit - 1 - base) / step + 1);

    std::vector<Term> out;
    if (slots <= 4 * xi.size() * yi.size() + 4096) {
        std::vector<Integer> acc(slots);
        std::vector<char> touched(slots, 0);
        for (std::size_t i = 0; i < xi.size(); ++i) {
            for (std::size_t j = 0; j < yi.size(); ++j) {
                const auto idx = xi[i] + yi[j];
                if (idx >= limit) {
                    break;
                }
                const auto slot = static_cast<std::size_t>((idx - base) / step);
                mpz_addmul(acc[slot].get_mpz_t(), xs[i].get_mpz_t(), ys[j].get_mpz_t());
                touched[slot] = 1;
            }
        }
        for (std::size_t s = 0; s < slots; ++s) {
            if (touched[s] && acc[s] != 0) {
                Rational c(acc[s], den);
                c.canonicalize();
                out.push_back(Term{base + static_cast<std::int64_t>(s) * step, std::move(c)});
            }
        }
    } else {
        std::vector<std::pair<std::int64_t, Integer>> products;
        for (std::size_t i = 0; i < xi.size(); ++i) {
            for (std::size_t j = 0; j < yi.size(); ++j) {
                const auto idx = xi[i] + yi[j];
                if (idx >= limit) {
                    break;
                }
                products.emplace_back(idx, xs[i] * ys[j]);
            }
        }
        std::sort(products.begin(), products.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t p = 0; p < products.size();) {
            Integer sum = 0;
            const auto idx = products[p].first;
            for (; p < products.size() && products[p].first == idx; ++p) {
                sum += products[p].second;
            }
            if (sum != 0) {
                Rational c(sum, den);
                c.canonicalize();
                out.push_back(Term{idx, std::move(c)});
            }
        }
    }
    return QSeries(grid, std::move(out), precision);
}

QSeries invert(const QSeries& x)
{
    if (x.is_zero()) {
        throw std::domain_error("not invertible");
    }
    const auto grid = x.grid_;
    const auto k0 = x.terms_.front().index;
    const Rational e0 = x.lowest_exponent();
    const Rational precision = x.precision_ - 2 * e0;
    const Rational relative = x.precision_ - e0;

    std::int64_t step = step_gcd(x.terms_, 1);
    if (step == 0) {
        step = grid; // a monomial: any positive step works, keep the inverse on the grid
    }
    // Result indices -k0 + n * step for n * step < relative * grid.
    const auto rel_limit = index_limit(relative, grid);
    const auto count = static_cast<std::size_t>(rel_limit <= 0 ? 0 : (rel_limit - 1) / step + 1);

    const Integer dx = lcm_of_denominators(x.terms_);
    const auto xs = integer_numerators(x.terms_, dx);
    const Integer& lead = xs.front();

    // With X = dx * x = sum_m A_m q^(e0 + m*step/D) and lead C = A_0, write
    // 1/X = q^(-e0) sum_n B_n / C^(n+1) q^(n*step/D). Then B_0 = 1 and
    // B_n = -sum_{m>=1} A_m C^(m-1) B_{n-m}, all in integers.
    std::vector<std::pair<std::size_t, Integer>> scaled; // (m, A_m C^(m-1))
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const auto m = static_cast<std::size_t>((x.terms_[i].index - k0) / step);
        if (m >= count) {
            break;
        }
        Integer cp;
        mpz_pow_ui(cp.get_mpz_t(), lead.get_mpz_t(), m - 1);
        scaled.emplace_back(m, xs[i] * cp);
    }

    std::vector<Integer> b(count);
    std::vector<Term> out;
    Integer lead_power = lead; // C^(n+1)
    for (std::size_t n = 0; n < count; ++n) {
        if (n == 0) {
            b[0] = 1;
        } else {
            Integer acc = 0;
            for (const auto& [m, am] : scaled) {
                if (m > n) {
                    break;
                }
                if (b[n - m] != 0) {
                    mpz_submul(acc.get_mpz_t(), am.get_mpz_t(), b[n - m].get_mpz_t());
                }
            }
            b[n] = std::move(acc);
            lead_power *= lead;
        }
        if (b[n] != 0) {
            Rational c(b[n] * dx, lead_power);
            c.canonicalize();
            out.push_back(Term{-k0 + static_cast<std::int64_t>(n) * step, std::move(c)});
        }
    }
    return QSeries(grid, std::move(out), precision);
}

QSeries theta_derive(const QSeries& x)
{
    std::vector<Term> out;
    out.reserve(x.terms_.size());
    for (const auto& t : x.terms_) {
        if (t.index == 0) {
            continue;
        }
        out.push_back(Term{t.index, t.coeff * make_rational(t.index, x.grid_)});
    }
    return QSeries(x.grid_, std::move(out), x.precision_);
}

QSeries theta_derive(const QSeries& x, int times)
{
    QSeries out = x;
    for (int i = 0; i < times; ++i) {
        out = theta_derive(out);
    }
    return out;
}

QSeries pow(const QSeries& x, unsigned n)
{
    if (n == 0) {
        return QSeries::one(x.precision());
    }
    QSeries base = x;
    std::optional<QSeries> acc;
    while (true) {
        if (n & 1U) {
            acc = acc ? mul(*acc, base) : base;
        }
        n >>= 1U;
        if (n == 0) {
            break;
        }
        base = mul(base, base);
    }
    return *acc;
}

QSeries shift(const QSeries& x, const Rational& e)
{
    const auto grid = lcm_int(x.grid_, to_int64(e.get_den()));
    const auto mult = grid / x.grid_;
    const auto delta = to_int64(Rational(e * grid).get_num());
    std::vector<Term> out = x.terms_;
    for (auto& t : out) {
        t.index = t.index * mult + delta;
    }
    return QSeries(grid, std::move(out), x.precision_ + e);
}

std::optional<Rational> first_difference(const QSeries& x, const QSeries& y, const Rational& bound)
{
    if (bound > x.precision() || bound > y.precision()) {
        throw std::invalid_argument("insufficient precision");
    }
    const auto grid = lcm_int(x.grid_denominator(), y.grid_denominator());
    const auto mx = grid / x.grid_denominator();
    const auto my = grid / y.grid_denominator();
    const auto limit = index_limit(bound, grid);
    const auto xt = x.terms();
    const auto yt = y.terms();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < xt.size() || j < yt.size()) {
        const auto xi = i < xt.size() ? xt[i].index * mx : limit;
        const auto yj = j < yt.size() ? yt[j].index * my : limit;
        const auto idx = std::min(xi, yj);
        if (idx >= limit) {
            break;
        }
        if (xi != yj || xt[i].coeff != yt[j].coeff) {
            return make_rational(idx, grid);
        }
        ++i;
        ++j;
    }
    return std::nullopt;
}

bool equal_up_to(const QSeries& x, const QSeries& y, const Rational& bound)
{
    return !first_difference(x, y, bound).has_value();
}

} // namespace qseries
