#include "hyperpoly/rational.hpp"

#include <cctype>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || (den.front() == '-' || den.front() == '+'))
        throw ParseError("not an exact rational: '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int ord_p(const mpz_class& n, std::uint64_t p) {
    if (n == 0) throw DomainError("ord_p of zero");
    if (p < 2) throw DomainError("ord_p needs p >= 2");
    mpz_class m = abs(n);
    int k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    return k;
}

Rational reduce_angle(const Rational& q) {
    // q - 2 * floor(q / 2)
    Rational half = q / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
    Rational r = q - Rational(fl * 2);
    r.canonicalize();
    return r;
}

}  // namespace hyperpoly
