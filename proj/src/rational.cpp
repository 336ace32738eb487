#include "tiltlab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tiltlab {

namespace {

// Validates an optionally signed decimal integer and returns it with any
// leading '+' stripped (mpz set_str rejects '+').
std::string check_integer_token(const std::string& tok, const std::string& whole) {
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
    if (i == tok.size()) throw std::invalid_argument("bad rational literal: " + whole);
    for (std::size_t j = i; j < tok.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(tok[j])))
            throw std::invalid_argument("bad rational literal: " + whole);
    }
    return tok[0] == '+' ? tok.substr(1) : tok;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    std::string num, den;
    if (slash == std::string::npos) {
        num = check_integer_token(text, text);
        den = "1";
    } else {
        num = check_integer_token(text.substr(0, slash), text);
        den = check_integer_token(text.substr(slash + 1), text);
    }
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal: " + text);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor_rational(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Integer ceil_rational(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

bool rational_sqrt(const Rational& r, Rational* root) {
    if (r < 0) return false;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    if (root) {
        Integer sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        *root = Rational(sn, sd);
        root->canonicalize();
    }
    return true;
}

}  // namespace tiltlab
