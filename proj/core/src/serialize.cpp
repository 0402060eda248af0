#include <qseries/qseries.hpp>

#include <sstream>
#include <stdexcept>

namespace qseries {

std::string to_text(const QSeries& x)
{
    std::ostringstream out;
    out << "D=" << x.grid_denominator() << " P=" << to_string(x.precision()) << '\n';
    for (const auto& t : x.terms()) {
        out << to_string(x.exponent_of(t)) << ' ' << to_string(t.coeff) << '\n';
    }
    return out.str();
}

QSeries from_text(const std::string& text)
{
    std::istringstream in(text);
    std::string header_d;
    std::string header_p;
    if (!(in >> header_d >> header_p) || header_d.rfind("D=", 0) != 0 || header_p.rfind("P=", 0) != 0) {
        throw std::invalid_argument("malformed series header");
    }
    const Rational grid_value = parse_rational(header_d.substr(2));
    if (grid_value.get_den() != 1 || grid_value <= 0) {
        throw std::invalid_argument("grid denominator must be a positive integer");
    }
    const auto grid = to_int64(grid_value.get_num());
    const Rational precision = parse_rational(header_p.substr(2));

    std::vector<Term> terms;
    std::string e_text;
    std::string c_text;
    Rational previous;
    while (in >> e_text) {
        if (!(in >> c_text)) {
            throw std::invalid_argument("term line without coefficient");
        }
        const Rational e = parse_rational(e_text);
        const Rational c = parse_rational(c_text);
        const Rational scaled = e * grid;
        if (scaled.get_den() != 1) {
            throw std::invalid_argument("exponent " + e_text + " is off the grid");
        }
        if (c == 0) {
            throw std::invalid_argument("zero coefficient stored");
        }
        if (e >= precision) {
            throw std::invalid_argument("term beyond precision");
        }
        if (!terms.empty() && e <= previous) {
            throw std::invalid_argument("exponents not strictly increasing");
        }
        previous = e;
        terms.push_back(Term{to_int64(scaled.get_num()), c});
    }
    return QSeries::from_terms(grid, std::move(terms), precision);
}

} // namespace qseries
