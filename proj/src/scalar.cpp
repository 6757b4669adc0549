#include "g2h/scalar.hpp"

#include <cctype>
#include <cmath>

namespace g2h {

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
}

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// digits ['/' digits]; no sign
Rational parse_unsigned_rational(const std::string& s, size_t& i) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("Scalar::parse: expected digits in '" + s + "'");
    mpz_class num(s.substr(start, i - start));
    mpz_class den(1);
    if (i < s.size() && s[i] == '/') {
        ++i;
        size_t dstart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == dstart) throw std::invalid_argument("Scalar::parse: expected denominator in '" + s + "'");
        den = mpz_class(s.substr(dstart, i - dstart));
        if (den == 0) throw std::invalid_argument("Scalar::parse: zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool at_r2(const std::string& s, size_t i) {
    return i + 1 < s.size() && s[i] == 'r' && s[i + 1] == '2';
}

// [sign] (rational ['r2'] | 'r2')
Scalar parse_term(const std::string& s, size_t& i) {
    skip_ws(s, i);
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
        skip_ws(s, i);
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coeff = parse_unsigned_rational(s, i);
        have_coeff = true;
    }
    skip_ws(s, i);
    if (at_r2(s, i)) {
        i += 2;
        return Scalar(Rational(0), sign * coeff);
    }
    if (!have_coeff) throw std::invalid_argument("Scalar::parse: expected a term in '" + s + "'");
    return Scalar(sign * coeff, Rational(0));
}

std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (irr_ == 0) return rat_str(rat_);
    std::string irr_part = (irr_ == 1 ? "" : rat_str(abs(irr_)) + " ") + std::string("r2");
    if (rat_ == 0) return (sgn(irr_) < 0 ? "-" : "") + irr_part;
    return rat_str(rat_) + (sgn(irr_) < 0 ? " - " : " + ") + irr_part;
}

Scalar Scalar::parse_prefix(const std::string& text, size_t& pos) {
    Scalar result = parse_term(text, pos);
    size_t save = pos;
    skip_ws(text, save);
    if (save < text.size() && (text[save] == '+' || text[save] == '-')) {
        size_t j = save;
        Scalar second = parse_term(text, j);
        result += second;
        pos = j;
    }
    return result;
}

Scalar Scalar::parse(const std::string& text) {
    size_t pos = 0;
    Scalar result = parse_prefix(text, pos);
    skip_ws(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("Scalar::parse: trailing input in '" + text + "'");
    return result;
}

std::optional<Scalar> Scalar::sqrt_in_field() const {
    if (is_zero()) return Scalar(0);
    if (sign() < 0) return std::nullopt;
    if (irr_ == 0) {
        if (auto a = rational_sqrt(rat_)) return Scalar(*a, Rational(0));
        if (auto b = rational_sqrt(rat_ / 2)) return Scalar(Rational(0), *b);
        return std::nullopt;
    }
    // x = a + b r2 with 2ab = irr, a^2 + 2b^2 = rat:
    // a^2 = (rat +- sqrt(rat^2 - 2 irr^2)) / 2
    auto d = rational_sqrt(rat_ * rat_ - 2 * irr_ * irr_);
    if (!d) return std::nullopt;
    for (int s : {+1, -1}) {
        Rational asq = (rat_ + s * *d) / 2;
        if (auto a = rational_sqrt(asq)) {
            if (*a == 0) continue;
            Scalar cand(*a, irr_ / (2 * *a));
            if (cand * cand == *this) return cand.sign() >= 0 ? cand : -cand;
        }
    }
    return std::nullopt;
}

double Scalar::to_double() const {
    return rat_.get_d() + irr_.get_d() * std::sqrt(2.0);
}

}  // namespace g2h
