#include "necklace/rational.hpp"

#include <ostream>

#include "necklace/errors.hpp"

namespace necklace {

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    auto parse_int = [&](std::string_view t, size_t off) -> mpz_class {
        if (t.empty()) throw ParseError("empty integer", off);
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw ParseError("sign without digits", off);
        for (size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') throw ParseError("bad digit in rational", off + j);
        return mpz_class(std::string(t), 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s, 0));
    mpz_class num = parse_int(s.substr(0, slash), 0);
    mpz_class den = parse_int(s.substr(slash + 1), slash + 1);
    if (sgn(den) == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace necklace
