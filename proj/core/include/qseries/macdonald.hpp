#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qseries/qseries.hpp>
#include <qseries/virasoro.hpp>

namespace qseries {

// One summand of a k-fold lattice sum: weight * q^exponent.
struct LatticeTerm {
    std::vector<std::int64_t> n_vec;
    Rational exponent;
    Rational weight;
};

// prod_{i<j} ((2i-1 + n_i(4k+2))^2 - (2j-1 + n_j(4k+2))^2), indices 1-based.
Integer chi_d(int k, std::span<const std::int64_t> n_vec);
// (2k^2-k)/24 + sum_i ((2k+1) n_i^2 / 2 + (2i-1) n_i / 2).
Rational lattice_exponent(int k, std::span<const std::int64_t> n_vec);
// 1 / (2^(k(k-1)) prod_{i<j} (i-j)(i+j-1)). Requires k >= 2.
Rational c_k_constant(int k);

// Largest |n| a single coordinate can take while (2k+1)n^2/2 - (2k-1)|n|/2 stays below
// order - (2k^2-k)/24. Every lattice point outside [-w, w]^k has exponent >= order.
std::int64_t macdonald_window(int k, const Rational& order);

// Visits every term with nonzero chi_d and exponent < order, in lexicographic order of
// n_vec over [-window, window]^k. `window` defaults to macdonald_window(k, order).
void for_each_macdonald_term(int k, const Rational& order, const std::function<void(const LatticeTerm&)>& visit,
                             std::optional<std::int64_t> window = std::nullopt);

// C_k (-1)^(k(k-1)/2) sum_{n in Z^k} (-1)^(sum n_i) chi_d(n) q^(L(n)), precision `order`.
// Requires k >= 2 and order > (2k^2-k)/24.
QSeries macdonald_rhs(int k, const Rational& order, std::optional<std::int64_t> window = std::nullopt);

// Per-coordinate bound for the non-negative sum: least n with n^2 >= 4st * order.
std::int64_t general_window(const MinimalModel& model, const Rational& order);

// Visits the terms of sum_{n in N_0^k} (prod_i chi_i(n_i)) V(n_1^2, ..., n_k^2) q^(sum n_i^2 / 4st)
// with exponent < order and nonzero weight, chi_i the indicator of the i-th distinct weight.
// Coordinates only range over the residues where chi_i is nonzero.
void for_each_general_term(const MinimalModel& model, const Rational& order,
                           const std::function<void(const LatticeTerm&)>& visit,
                           std::optional<std::int64_t> window = std::nullopt);

// The sum above as a series of precision `order` (on grid 4st). Requires order > 0.
QSeries general_rhs(const MinimalModel& model, const Rational& order,
                    std::optional<std::int64_t> window = std::nullopt);

struct VerificationReport {
    std::string identity_name;
    std::map<std::string, std::int64_t> parameters;
    Rational order;
    Rational constant_found;
    bool match = false;
    std::optional<Rational> first_mismatch_exponent;
    std::int64_t terms_compared = 0;
};

// Fixes c = lead(rhs) / lead(lhs) and checks rhs == c * lhs below `order`.
// Requires order <= both precisions (std::invalid_argument otherwise) and both
// series nonzero at their precision (std::domain_error otherwise).
VerificationReport empirical_constant(const QSeries& lhs, const QSeries& rhs, const Rational& order);

enum class IdentityKind { euler, jacobi, macdonald, denominator, wronskian_raw, wronskian_normalized, weber };

struct IdentitySpec {
    IdentityKind kind = IdentityKind::euler;
    int k = 0; // macdonald
    int s = 0; // model identities
    int t = 0;
};

// "euler", "jacobi", "macdonald", "denominator", "wronskian_raw", "wronskian_normalized", "weber";
// '-' is accepted in place of '_'.
IdentityKind parse_identity_kind(std::string_view name);
std::string identity_kind_name(IdentityKind kind);

// Runs one identity. `order` is the span checked above the leading exponent of the eta side:
// every exponent below lead + order is compared.
// macdonald with k = 1 is rejected with a pointer to the euler identity.
VerificationReport verify_identity(const IdentitySpec& spec, const Rational& order);

// Serializations of a report. The text record is one line; the structured form is a JSON
// object with fields identity, params, order, constant, match, first_mismatch, terms_compared.
std::string to_text_record(const VerificationReport& report);
std::string to_json(const VerificationReport& report);

} // namespace qseries
