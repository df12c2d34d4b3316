#pragma once

#include <cstddef>

#include "pdil/rational.hpp"
#include "pdil/words.hpp"

namespace pdil {

/// Two's-complement value of a word ending in (0) or (1):
/// w_1...w_n(0) -> Σ w_k 2^{k-1}, w_1...w_n(1) -> Σ w_k 2^{k-1} - 2^n.
Integer d_Z(const EPWord& w);
/// Inverse of d_Z.
EPWord d_Z_inv(const Integer& k);

/// Checks (x + d(w)) / 2^n = τ_{w_n}...τ_{w_1} x + d(w_{n+1} w_{n+2} ...).
bool shift_identity_check(const Rational& x, const EPWord& w, long n);

/// Value of the word read as a 2-adic integer; rational with odd denominator.
Rational two_adic_value(const EPWord& w);

struct CycleCoordinate {
    Rational y;
    std::size_t j = 0;

    friend bool operator==(const CycleCoordinate&, const CycleCoordinate&) = default;
};

/// Rotation index j(w) of the tail of w after the preperiod is padded to a
/// multiple of the cycle length. Throws if the period is not a rotation of C.
std::size_t cycle_index(const EPWord& w, const Cycle& C);

/// k(w) = Σ_{i<np} 2^i w_i + θ_j - 2^{np} θ_j; always an integer.
Integer cycle_k(const EPWord& w, const Cycle& C);

/// (x - θ_j + k(w), j).
CycleCoordinate d_C(const Rational& x, const EPWord& w, const Cycle& C);

struct CyclePoint {
    Rational x;
    EPWord w;

    friend bool operator==(const CyclePoint&, const CyclePoint&) = default;
};

/// Inverse of d_C by the division chain a - θ_j = 2 R + d.
CyclePoint d_C_inv(const Rational& y, std::size_t j, const Cycle& C);

} // namespace pdil
