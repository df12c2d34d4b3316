#include "pdil/rational.hpp"

#include <cctype>
#include <ostream>

#include "pdil/errors.hpp"

namespace pdil {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error(ErrorKind::Precondition, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(mpq_class v) : value_(std::move(v))
{
    value_.canonicalize();
}

namespace {

// Reads an optionally signed decimal integer starting at `pos`; advances `pos`.
Integer read_integer(std::string_view text, std::size_t& pos, std::size_t base_offset)
{
    const std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == digits_start)
        throw ParseError(base_offset + start, "expected integer");
    Integer v(std::string(text.substr(digits_start, pos - digits_start)), 10);
    return negative ? Integer(-v) : v;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    std::size_t pos = 0;
    Integer num = read_integer(text, pos, 0);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t den_pos = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            throw ParseError(den_pos, "signed denominator");
        den = read_integer(text, pos, 0);
        if (den == 0)
            throw ParseError(den_pos, "zero denominator");
    }
    if (pos != text.size())
        throw ParseError(pos, "trailing characters in rational");
    return Rational(num, den);
}

Rational Rational::pow2(long e)
{
    Integer p = 1;
    const unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n);
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const
{
    return *this - Rational(floor());
}

Rational Rational::abs() const
{
    return sign() < 0 ? -*this : *this;
}

std::string Rational::str() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.sign() == 0)
        throw Error(ErrorKind::Precondition, "division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

} // namespace pdil
