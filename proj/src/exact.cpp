#include "singlat/exact.hpp"

#include <cctype>

namespace singlat {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool parse_integer(std::string_view text, Integer& out) {
    if (text.empty()) return false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') pos = 1;
    if (pos == text.size()) return false;
    for (std::size_t i = pos; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    // mpz_class rejects a leading '+'.
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (!parse_integer(text.substr(0, slash), num))
        throw Error("invalid rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        const auto rest = text.substr(slash + 1);
        if (rest.empty() || rest[0] == '+' || rest[0] == '-' || !parse_integer(rest, den))
            throw Error("invalid rational '" + std::string(text) + "'");
        if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw Error("integer " + z.get_str() + " out of machine range");
    return z.get_si();
}

long to_long(const Rational& q) {
    if (!is_integer(q)) throw Error("expected an integer, got " + to_string(q));
    return to_long(q.get_num());
}

}  // namespace singlat
