#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gsm/algebra.hpp"
#include "gsm/error.hpp"
#include "gsm/numeric.hpp"
#include "gsm/polynomial.hpp"
#include "gsm/slice.hpp"

namespace gsm {

// Normalized sphere moment mu_k = (1/A_q) int_S <eta, u>^k dS(eta) for unit u:
// zero for odd k, and
//   mu_{2m} = (2m-1)!! / (q(q+2)...(q+2m-2)),  mu_0 = 1.
// Working with normalized moments keeps the sphere area A_q (a transcendental)
// out of every exact path.
inline Rational sphere_moment(int k, int q) {
    if (k < 0 || q < 1) throw Error("sphere_moment: k >= 0 and q >= 1 required");
    if (k % 2 != 0) return Rational(0);
    const int m = k / 2;
    Int den = 1;
    for (int j = 0; j < m; ++j) den *= q + 2 * j;
    return Rational(double_factorial(2 * m - 1), den);
}

// Dual Radon transform on slice form, exactly:
// with F1 = sum_k r^{2k} a_k(x_p) and F2 = sum_k r^{2k+1} b_k(x_p),
//   R'[f] has F1' = sum_k mu_{2k} r^{2k} a_k,  F2' = sum_k mu_{2k+2} r^{2k+1} b_k.
// The odd moments die by symmetry; the vector identity
// int_S eta <u,eta>^{2k+1} dS = A_q mu_{2k+2} |u|^{2k} u supplies the F2 row.
inline SlicePair dual_radon(const SlicePair& F) {
    auto report = validate_slice_pair(F.F1, F.F2);
    if (!report.ok()) throw Error("dual_radon: " + report.violations.front().reason);
    const auto& ctx = F.ctx();
    const int rv = r_index(ctx);
    Poly F1(ctx, VarSet::Slice), F2(ctx, VarSet::Slice);
    for (const auto& [e, c] : F.F1.terms())
        F1.add_term(e, c * sphere_moment(e[rv], ctx.q));
    for (const auto& [e, c] : F.F2.terms())
        F2.add_term(e, c * sphere_moment(e[rv] + 1, ctx.q));
    return SlicePair{std::move(F1), std::move(F2)};
}

// Slice form of D_omega f = (D_{x_p} + omega d_r) f: the generalized
// Cauchy-Riemann residual repackaged as a slice pair.
inline SlicePair dw_slice_apply(const SlicePair& F) {
    auto [P1, P2] = cr_residual(F);
    return make_slice_pair(std::move(P1), std::move(P2));
}

// --- Monte-Carlo sphere quadrature -----------------------------------------

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std distributions so seeded runs are reproducible.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal pair via Box-Muller.
inline std::pair<double, double> gaussian_pair(std::mt19937_64& rng) {
    double u1 = 0.0;
    do {
        u1 = uniform01(rng);
    } while (u1 == 0.0);
    const double u2 = uniform01(rng);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

// Uniform sample on the unit sphere of R^q: normalized standard normals.
inline std::vector<double> sample_unit_sphere(std::mt19937_64& rng, int q) {
    std::vector<double> v(q);
    while (true) {
        for (int i = 0; i < q; i += 2) {
            auto [a, b] = gaussian_pair(rng);
            v[i] = a;
            if (i + 1 < q) v[i + 1] = b;
        }
        double norm2 = 0.0;
        for (double c : v) norm2 += c * c;
        if (norm2 > 1e-300) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (double& c : v) c *= inv;
            return v;
        }
    }
}

struct MonteCarloEstimate {
    Multivector<double> estimate;
    Multivector<double> std_error;  // component-wise standard error of the mean
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

// Monte-Carlo dual Radon transform at a point:
//   (1/N) sum_j f(x_p, <x_q, eta_j> eta_j)
// over uniform sphere samples. q = 1 degenerates to the two-point measure
// {+e_{p+1}, -e_{p+1}}, where both points give <x_q,eta>eta = x_q, so the
// average is f(x) itself.
inline MonteCarloEstimate dual_radon_numeric(const Evaluator& f, const AlgebraContext& ctx,
                                             const PointFull& x, std::size_t samples,
                                             std::uint64_t seed) {
    if (static_cast<int>(x.coords.size()) != ctx.n() + 1)
        throw Error("dual_radon_numeric: point arity mismatch");
    Multivector<double> sum(ctx), sumsq(ctx);
    std::vector<double> point(x.coords);

    auto accumulate = [&](const std::vector<double>& eta) {
        double dot = 0.0;
        for (int i = 0; i < ctx.q; ++i) dot += x.coords[ctx.p + 1 + i] * eta[i];
        for (int i = 0; i < ctx.q; ++i) point[ctx.p + 1 + i] = dot * eta[i];
        const auto value = f(point);
        sum += value;
        for (BladeIndex b = 0; b < sumsq.dim(); ++b) sumsq[b] += value[b] * value[b];
    };

    std::size_t n = samples;
    if (ctx.q == 1) {
        n = 2;
        accumulate({1.0});
        accumulate({-1.0});
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t j = 0; j < n; ++j) accumulate(sample_unit_sphere(rng, ctx.q));
    }

    MonteCarloEstimate out{Multivector<double>(ctx), Multivector<double>(ctx), n, seed};
    const double inv_n = 1.0 / static_cast<double>(n);
    out.estimate = sum * inv_n;
    for (BladeIndex b = 0; b < sum.dim(); ++b) {
        const double mean = out.estimate[b];
        const double var = std::max(0.0, sumsq[b] * inv_n - mean * mean);
        out.std_error[b] = std::sqrt(var * inv_n);
    }
    return out;
}

struct ScalarEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

// Monte-Carlo check value for mu_k: the sample mean of <eta, u>^k with u an
// axis unit vector.
inline ScalarEstimate sphere_moment_numeric(int k, int q, std::size_t samples,
                                            std::uint64_t seed) {
    if (q < 2) throw Error("sphere_moment_numeric: sampling needs q >= 2");
    std::mt19937_64 rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t j = 0; j < samples; ++j) {
        const auto eta = sample_unit_sphere(rng, q);
        double v = 1.0;
        for (int i = 0; i < k; ++i) v *= eta[0];
        sum += v;
        sumsq += v * v;
    }
    const double inv_n = 1.0 / static_cast<double>(samples);
    const double mean = sum * inv_n;
    const double var = std::max(0.0, sumsq * inv_n - mean * mean);
    return {mean, std::sqrt(var * inv_n), samples, seed};
}

}  // namespace gsm
