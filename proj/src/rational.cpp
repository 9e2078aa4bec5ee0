#include "qlogic/rational.hpp"

#include "qlogic/error.hpp"
#include "qlogic/random.hpp"

#include <algorithm>
#include <cctype>

namespace qlogic {

std::string to_fraction_string(const Rational &value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
        throw Error(Error::Kind::Malformed, "not a fraction: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
    mpz_class d{std::string(den)};
    if (d == 0) {
        throw Error(Error::Kind::Malformed, "zero denominator: '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

bool lex_less(const std::vector<Rational> &a, const std::vector<Rational> &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Rational random_unit_rational(std::mt19937_64 &rng, unsigned max_denominator) {
    std::uniform_int_distribution<unsigned> den(1, max_denominator);
    unsigned d = den(rng);
    std::uniform_int_distribution<unsigned> num(0, d);
    Rational q(num(rng), d);
    q.canonicalize();
    return q;
}

}  // namespace qlogic
