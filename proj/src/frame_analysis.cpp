#include "pdil/frame_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace pdil {

namespace {

// e^{-2πi t} with t reduced to [0,1) exactly.
std::complex<double> unit_phase(const Rational& t)
{
    const double angle = -2.0 * std::numbers::pi * t.frac().to_double();
    return {std::cos(angle), std::sin(angle)};
}

Rational phase_rate(const IndexPair& a, const IndexPair& b)
{
    return Rational(a.k) * Rational::pow2(a.j) - Rational(b.k) * Rational::pow2(b.j);
}

} // namespace

std::complex<double> integrate_exp(const IntervalSet& A, const Rational& theta)
{
    if (theta.sign() == 0)
        return measure(A).to_double();
    std::complex<double> sum = 0;
    const std::complex<double> denom(0, -2.0 * std::numbers::pi * theta.to_double());
    for (const auto& iv : A.intervals())
        sum += (unit_phase(theta * iv.hi) - unit_phase(theta * iv.lo)) / denom;
    return sum;
}

std::complex<double> wavelet_inner_product(const IntervalSet& P, const IndexPair& a, const IndexPair& b)
{
    // wavelet sets are semi-orthogonal: different scales have disjoint supports
    const IntervalSet common = intersect(dilate(P, Rational::pow2(-a.j)), dilate(P, Rational::pow2(-b.j)));
    if (common.empty())
        return 0;
    const double scale = std::exp2(0.5 * static_cast<double>(a.j + b.j));
    return scale * integrate_exp(common, phase_rate(a, b));
}

std::vector<IndexPair> index_box(long J, long K)
{
    std::vector<IndexPair> out;
    for (long j = -J; j <= J; ++j)
        for (long k = -K; k <= K; ++k)
            out.push_back({j, k});
    return out;
}

GramMatrix complement_gram(const IntervalSet& P, long J, long K)
{
    GramMatrix g;
    g.indices = index_box(J, K);
    const auto n = static_cast<Eigen::Index>(g.indices.size());
    g.entries.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            g.entries(r, c) = (r == c ? 1.0 : 0.0) - wavelet_inner_product(P, g.indices[r], g.indices[c]);
    return g;
}

double smallest_eigenvalue(const Eigen::MatrixXcd& H)
{
    const Eigen::Index n = H.rows();
    if (n == 0)
        return 0;
    Eigen::MatrixXd E(2 * n, 2 * n);
    const Eigen::MatrixXd A = 0.5 * (H + H.adjoint()).real();
    const Eigen::MatrixXd B = 0.5 * (H + H.adjoint()).imag();
    E << A, -B, B, A;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(E, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

GramReport analyze_gram(const GramMatrix& g)
{
    GramReport r;
    r.dimension = static_cast<long>(g.indices.size());
    r.max_abs_entry = g.entries.size() ? g.entries.cwiseAbs().maxCoeff() : 0.0;
    r.hermitian_defect = g.entries.size() ? (g.entries - g.entries.adjoint()).cwiseAbs().maxCoeff() : 0.0;
    r.smallest_eigenvalue = smallest_eigenvalue(g.entries);
    r.psd = r.smallest_eigenvalue >= -1e-9;
    if (!r.psd) {
        std::ostringstream msg;
        msg << "smallest eigenvalue " << r.smallest_eigenvalue << " below -1e-9";
        r.violations.push_back(msg.str());
    }
    if (r.hermitian_defect > 1e-12) {
        std::ostringstream msg;
        msg << "hermitian defect " << r.hermitian_defect << " above 1e-12";
        r.violations.push_back(msg.str());
    }
    return r;
}

InvarianceReport invariance_check(const IntervalSet& P, long samples, std::uint64_t seed, double tolerance)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> any_j(-3, 3);
    std::uniform_int_distribution<long> low_j(-3, 0);
    std::uniform_int_distribution<long> any_k(-5, 5);

    InvarianceReport r;
    r.samples = samples;
    for (long s = 0; s < samples; ++s) {
        const IndexPair a{any_j(rng), any_k(rng)};
        const IndexPair b{any_j(rng), any_k(rng)};
        const double d1 = std::abs(wavelet_inner_product(P, a, b)
                                   - wavelet_inner_product(P, {a.j + 1, a.k}, {b.j + 1, b.k}));

        const IndexPair c{low_j(rng), any_k(rng)};
        const IndexPair d{low_j(rng), any_k(rng)};
        const IndexPair c2{c.j, c.k + (1L << -c.j)};
        const IndexPair d2{d.j, d.k + (1L << -d.j)};
        const double d2v = std::abs(wavelet_inner_product(P, c, d) - wavelet_inner_product(P, c2, d2));

        r.max_deviation_inv1 = std::max(r.max_deviation_inv1, d1);
        r.max_deviation_inv2 = std::max(r.max_deviation_inv2, d2v);
        if (d1 > tolerance || d2v > tolerance)
            ++r.failures;
    }
    r.passed = r.failures == 0;
    return r;
}

double frame_partial_sum(const IntervalSet& A, const IntervalSet& P, long J, long K)
{
    double sum = 0;
    for (long j = -J; j <= J; ++j) {
        const IntervalSet common = intersect(A, dilate(P, Rational::pow2(-j)));
        if (common.empty())
            continue;
        const double scale = std::exp2(static_cast<double>(j));
        for (long k = -K; k <= K; ++k)
            sum += scale * std::norm(integrate_exp(common, Rational(k) * Rational::pow2(j)));
    }
    return sum;
}

} // namespace pdil
