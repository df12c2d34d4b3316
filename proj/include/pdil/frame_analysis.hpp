#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pdil/interval_set.hpp"

namespace pdil {

struct IndexPair {
    long j = 0;
    long k = 0;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// ∫_A e^{-2πiθξ} dξ, with θξ reduced mod 1 exactly before evaluation.
std::complex<double> integrate_exp(const IntervalSet& A, const Rational& theta);

/// ⟨U^j T^k ψ, U^{j'} T^{k'} ψ⟩ for ψ̂ = χ_P, U f = f(·/2)/√2, T f = f(· - 1).
std::complex<double> wavelet_inner_product(const IntervalSet& P, const IndexPair& a, const IndexPair& b);

struct GramMatrix {
    std::vector<IndexPair> indices; // j-major
    Eigen::MatrixXcd entries;
};

/// Indices (j, k) with |j| ≤ J, |k| ≤ K, j-major.
std::vector<IndexPair> index_box(long J, long K);

/// δ_{ab} - ⟨ψ_a, ψ_b⟩ over the index box.
GramMatrix complement_gram(const IntervalSet& P, long J, long K);

/// Smallest eigenvalue of a Hermitian matrix via the real symmetric embedding
/// [[A, -B], [B, A]].
double smallest_eigenvalue(const Eigen::MatrixXcd& H);

struct GramReport {
    double smallest_eigenvalue = 0;
    long dimension = 0;
    double max_abs_entry = 0;
    double hermitian_defect = 0;
    bool psd = false; // smallest eigenvalue ≥ -1e-9
    std::vector<std::string> violations;
};

GramReport analyze_gram(const GramMatrix& g);

struct InvarianceReport {
    long samples = 0;
    double max_deviation_inv1 = 0; // (j,k),(j',k') -> (j+1,k),(j'+1,k')
    double max_deviation_inv2 = 0; // k -> k + 2^{-j}, j ≤ 0
    long failures = 0;
    bool passed = false;
};

/// Samples index tuples and compares the wavelet-system kernel at related indices.
InvarianceReport invariance_check(const IntervalSet& P, long samples, std::uint64_t seed = 0x5eed,
                                  double tolerance = 1e-10);

/// Σ_{|j|≤J, |k|≤K} |⟨f, ψ_{j,k}⟩|² for f̂ = χ_A.
double frame_partial_sum(const IntervalSet& A, const IntervalSet& P, long J, long K);

} // namespace pdil
