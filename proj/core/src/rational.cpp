#include <qseries/rational.hpp>

#include <numeric>
#include <stdexcept>

namespace qseries {

std::string to_string(const Rational& value)
{
    return value.get_str();
}

std::string to_string(const Integer& value)
{
    return value.get_str();
}

Rational parse_rational(std::string_view text)
{
    auto is_integer_text = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };

    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_text(num_text) || !is_integer_text(den_text) || den_text.front() == '-'
        || den_text.front() == '+') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
    const Integer num{std::string(strip_plus(num_text))};
    const Integer den{std::string(den_text)};
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational out(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    out.canonicalize();
    return out;
}

std::int64_t to_int64(const Integer& value)
{
    if (!value.fits_slong_p()) {
        throw std::overflow_error("integer " + value.get_str() + " does not fit in 64 bits");
    }
    return value.get_si();
}

std::int64_t floor_int(const Rational& value)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return to_int64(q);
}

std::int64_t ceil_int(const Rational& value)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return to_int64(q);
}

std::int64_t gcd_int(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::int64_t lcm_int(std::int64_t a, std::int64_t b)
{
    return std::lcm(a, b);
}

} // namespace qseries
