#include "pdil/encoding.hpp"

#include "pdil/errors.hpp"

namespace pdil {

namespace {

Integer pow2z(std::size_t n)
{
    return Integer(1) << static_cast<mp_bitcnt_t>(n);
}

Integer binary_sum(const Word& digits)
{
    Integer v = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
        v = v * 2 + (digits[i] - '0');
    return v;
}

} // namespace

Integer d_Z(const EPWord& w)
{
    if (!w.has_constant_tail())
        throw Error(ErrorKind::Precondition, "word " + w.str() + " does not end in (0) or (1)");
    Integer v = binary_sum(w.preperiod());
    if (w.period() == "1")
        v -= pow2z(w.preperiod().size());
    return v;
}

EPWord d_Z_inv(const Integer& k)
{
    Word digits;
    if (k >= 0) {
        for (Integer v = k; v > 0; v >>= 1)
            digits += mpz_odd_p(v.get_mpz_t()) ? '1' : '0';
        return EPWord(digits, "0");
    }
    std::size_t n = 0;
    while (k + pow2z(n) < 0)
        ++n;
    Integer v = k + pow2z(n);
    for (std::size_t i = 0; i < n; ++i, v >>= 1)
        digits += mpz_odd_p(v.get_mpz_t()) ? '1' : '0';
    return EPWord(digits, "1");
}

bool shift_identity_check(const Rational& x, const EPWord& w, long n)
{
    if (n < 0)
        throw Error(ErrorKind::Precondition, "shift identity needs n >= 0");
    const Rational lhs = (x + Rational(d_Z(w))) * Rational::pow2(-n);
    Rational y = x;
    EPWord rest = w;
    for (long i = 0; i < n; ++i) {
        y = tau(rest.digit(0), y);
        rest = rest.tail();
    }
    return lhs == y + Rational(d_Z(rest));
}

Rational two_adic_value(const EPWord& w)
{
    // pre + 2^n * per / (1 - 2^p)
    const Integer pre = binary_sum(w.preperiod());
    const Integer per = binary_sum(w.period());
    const Integer scale = pow2z(w.preperiod().size());
    return Rational(pre) + Rational(Integer(scale * per), Integer(1 - pow2z(w.period().size())));
}

std::size_t cycle_index(const EPWord& w, const Cycle& C)
{
    const std::size_t p = C.length();
    const std::size_t np = (w.preperiod().size() + p - 1) / p * p;
    const auto j = C.rotation_index(w.prefix(np + p).substr(np));
    if (!j || w.period().size() != p)
        throw Error(ErrorKind::Precondition,
                    "period of " + w.str() + " is not a rotation of cycle word " + C.word());
    return *j;
}

Integer cycle_k(const EPWord& w, const Cycle& C)
{
    const std::size_t j = cycle_index(w, C);
    const std::size_t p = C.length();
    const std::size_t np = (w.preperiod().size() + p - 1) / p * p;
    const Rational k = Rational(binary_sum(w.prefix(np))) + C.theta(j) * Rational(Integer(1 - pow2z(np)));
    if (!k.is_integer())
        throw Error(ErrorKind::Internal, "k(w) is not an integer for " + w.str());
    return k.numerator();
}

CycleCoordinate d_C(const Rational& x, const EPWord& w, const Cycle& C)
{
    const std::size_t j = cycle_index(w, C);
    return {x - C.theta(j) + Rational(cycle_k(w, C)), j};
}

CyclePoint d_C_inv(const Rational& y, std::size_t j, const Cycle& C)
{
    const std::size_t p = C.length();
    if (j >= p)
        throw Error(ErrorKind::Precondition, "slot index out of range");
    if (C.word().find('0') == Word::npos || C.word().find('1') == Word::npos)
        throw Error(ErrorKind::Precondition, "cycle word " + C.word() + " must contain both digits");

    const Rational shifted = y + C.theta(j);
    CyclePoint out;
    out.x = shifted.frac();
    Integer a = shifted.floor();

    // a_n - θ_{j+n} = 2 (a_{n+1} - θ_{j+n+1}) + d_n, with d_n ≡ a_n + l_{j+n} mod 2.
    const std::size_t limit = 64 * p + mpz_sizeinbase(a.get_mpz_t(), 2);
    Word digits;
    std::size_t n = 0;
    while (a != 0) {
        if (n >= limit)
            throw Error(ErrorKind::Internal, "cycle division chain did not settle");
        const int l = C.word()[(j + n) % p] - '0';
        const Integer t = a + l;
        const int d = mpz_odd_p(t.get_mpz_t()) ? 1 : 0;
        digits += static_cast<char>('0' + d);
        a = (t - d) / 2;
        ++n;
    }
    out.w = EPWord(digits, C.rotation((j + n) % p));
    return out;
}

} // namespace pdil
