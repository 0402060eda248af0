#include <qseries/macdonald.hpp>

#include <qseries/eta.hpp>
#include <qseries/wronskian.hpp>

#include <algorithm>
#include <stdexcept>

namespace qseries {

namespace {

const Rational one_24 = make_rational(1, 24);

QSeries eta_power_or_one(std::int64_t power, const Rational& order)
{
    return power == 0 ? QSeries::one(order) : eta_power(static_cast<unsigned>(power), order);
}

// Rebuilds the entries with `extra` more span until their Wronskian is known up to `bound`.
template <typename Builder>
QSeries wronskian_to(const Rational& bound, Builder&& build_entries)
{
    Rational extra = 0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto w = wronskian(SeriesVector(build_entries(extra)));
        if (w.precision() >= bound) {
            return w.truncate(bound);
        }
        extra += bound - w.precision() + 1;
    }
    throw std::runtime_error("wronskian precision did not reach " + to_string(bound));
}

std::int64_t model_power_raw(const MinimalModel& model)
{
    return 2 * static_cast<std::int64_t>(model.k) * (model.k - 1);
}

std::int64_t model_power_normalized(const MinimalModel& model)
{
    return (2 * static_cast<std::int64_t>(model.k) - 1) * model.k;
}

} // namespace

VerificationReport empirical_constant(const QSeries& lhs, const QSeries& rhs, const Rational& order)
{
    if (order > lhs.precision() || order > rhs.precision()) {
        throw std::invalid_argument("insufficient precision");
    }
    if (lhs.is_zero() || rhs.is_zero()) {
        throw std::domain_error("empirical_constant needs two series that are nonzero at their precision");
    }
    VerificationReport report;
    report.order = order;

    // Exponents below `order` where either side has a term.
    const auto grid = lcm_int(lhs.grid_denominator(), rhs.grid_denominator());
    std::vector<std::int64_t> seen;
    for (const auto* side : {&lhs, &rhs}) {
        const auto mult = grid / side->grid_denominator();
        for (const auto& t : side->terms()) {
            if (side->exponent_of(t) >= order) {
                break;
            }
            seen.push_back(t.index * mult);
        }
    }
    std::sort(seen.begin(), seen.end());
    report.terms_compared = std::unique(seen.begin(), seen.end()) - seen.begin();

    if (lhs.lowest_exponent() != rhs.lowest_exponent()) {
        report.constant_found = 0;
        report.match = false;
        report.first_mismatch_exponent = std::min(lhs.lowest_exponent(), rhs.lowest_exponent());
        return report;
    }
    report.constant_found = rhs.leading_coefficient() / lhs.leading_coefficient();
    report.first_mismatch_exponent = first_difference(scale(lhs, report.constant_found), rhs, order);
    report.match = !report.first_mismatch_exponent.has_value();
    return report;
}

IdentityKind parse_identity_kind(std::string_view name)
{
    std::string key(name);
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "euler") return IdentityKind::euler;
    if (key == "jacobi") return IdentityKind::jacobi;
    if (key == "macdonald") return IdentityKind::macdonald;
    if (key == "denominator") return IdentityKind::denominator;
    if (key == "wronskian_raw") return IdentityKind::wronskian_raw;
    if (key == "wronskian_normalized") return IdentityKind::wronskian_normalized;
    if (key == "weber") return IdentityKind::weber;
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

std::string identity_kind_name(IdentityKind kind)
{
    switch (kind) {
    case IdentityKind::euler: return "euler";
    case IdentityKind::jacobi: return "jacobi";
    case IdentityKind::macdonald: return "macdonald";
    case IdentityKind::denominator: return "denominator";
    case IdentityKind::wronskian_raw: return "wronskian_raw";
    case IdentityKind::wronskian_normalized: return "wronskian_normalized";
    case IdentityKind::weber: return "weber";
    }
    throw std::logic_error("unknown identity kind");
}

VerificationReport verify_identity(const IdentitySpec& spec, const Rational& order)
{
    if (order <= 0) {
        throw std::invalid_argument("order must be greater than 0");
    }
    std::map<std::string, std::int64_t> params;
    QSeries lhs;
    QSeries rhs;
    Rational bound;

    switch (spec.kind) {
    case IdentityKind::euler: {
        bound = one_24 + order;
        lhs = eta_series(bound);
        rhs = pentagonal_sum_series(bound);
        break;
    }
    case IdentityKind::jacobi: {
        bound = make_rational(1, 8) + order;
        lhs = eta_power(3, bound);
        rhs = jacobi_cube_series(bound);
        break;
    }
    case IdentityKind::macdonald: {
        if (spec.k == 1) {
            throw std::invalid_argument("macdonald requires k >= 2; k = 1 is the euler identity (verify euler)");
        }
        if (spec.k < 2) {
            throw std::invalid_argument("macdonald requires k >= 2");
        }
        params["k"] = spec.k;
        const std::int64_t power = 2 * static_cast<std::int64_t>(spec.k) * spec.k - spec.k;
        bound = make_rational(power, 24) + order;
        lhs = eta_power(static_cast<unsigned>(power), bound);
        rhs = macdonald_rhs(spec.k, bound);
        break;
    }
    case IdentityKind::denominator: {
        const auto model = make_model(spec.s, spec.t);
        params["s"] = model.s;
        params["t"] = model.t;
        params["k"] = model.k;
        const std::int64_t power = 2 * static_cast<std::int64_t>(model.k) * model.k - model.k;
        bound = make_rational(power, 24) + order;
        lhs = eta_power(static_cast<unsigned>(power), bound);
        rhs = general_rhs(model, bound);
        break;
    }
    case IdentityKind::wronskian_raw: {
        const auto model = make_model(spec.s, spec.t);
        params["s"] = model.s;
        params["t"] = model.t;
        params["k"] = model.k;
        const auto power = model_power_raw(model);
        bound = make_rational(power, 24) + order;
        lhs = eta_power_or_one(power, bound);
        const auto labels = distinct_weights(model);
        rhs = wronskian_to(bound, [&](const Rational& extra) {
            std::vector<QSeries> entries;
            for (const auto& label : labels) {
                entries.push_back(character_double_sum(model, label, label.h_bar + order + extra));
            }
            return entries;
        });
        break;
    }
    case IdentityKind::wronskian_normalized: {
        const auto model = make_model(spec.s, spec.t);
        params["s"] = model.s;
        params["t"] = model.t;
        params["k"] = model.k;
        const auto power = model_power_normalized(model);
        bound = make_rational(power, 24) + order;
        lhs = eta_power(static_cast<unsigned>(power), bound);
        const auto labels = distinct_weights(model);
        rhs = wronskian_to(bound, [&](const Rational& extra) {
            std::vector<QSeries> entries;
            for (const auto& label : labels) {
                entries.push_back(normalized_character(model, label, label.h_bar + one_24 + order + extra));
            }
            return entries;
        });
        break;
    }
    case IdentityKind::weber: {
        bound = make_rational(12, 24) + order;
        lhs = eta_power(12, bound);
        rhs = wronskian_to(bound, [&](const Rational& extra) {
            return std::vector<QSeries>{weber_series(WeberKind::f, -make_rational(1, 48) + order + extra),
                                        weber_series(WeberKind::f1, -make_rational(1, 48) + order + extra),
                                        weber_series(WeberKind::f2, one_24 + order + extra)};
        });
        break;
    }
    }

    auto report = empirical_constant(lhs, rhs, bound);
    report.identity_name = identity_kind_name(spec.kind);
    report.parameters = std::move(params);
    report.order = order;
    return report;
}

} // namespace qseries
