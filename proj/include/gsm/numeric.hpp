#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "gsm/algebra.hpp"
#include "gsm/polynomial.hpp"

namespace gsm {

// Black-box map from a coordinate point to a float multivector. The oracle
// consumes only point evaluations, never symbolic structure.
using Evaluator = std::function<Multivector<double>(const std::vector<double>&)>;

struct FDConfig {
    double h = 1e-4;  // central differences, O(h^2)
};

// Wraps a polynomial as an evaluator; coefficients are converted to double
// once, not per call.
inline Evaluator evaluator_of(const Poly& f) {
    auto compiled = std::make_shared<CliffordPolynomial<double>>(to_double_poly(f));
    return [compiled](const std::vector<double>& x) { return poly_eval(*compiled, x); };
}

inline Multivector<double> fd_partial(const Evaluator& f, const std::vector<double>& x, int var,
                                      const FDConfig& cfg = {}) {
    std::vector<double> hi(x), lo(x);
    hi[var] += cfg.h;
    lo[var] -= cfg.h;
    return (f(hi) - f(lo)) * (1.0 / (2.0 * cfg.h));
}

// Central-difference realization of D_x = sum_{i=0}^{p+q} e_i d/dx_i.
inline Multivector<double> fd_dirac_full(const Evaluator& f, const AlgebraContext& ctx,
                                         const std::vector<double>& x, const FDConfig& cfg = {}) {
    Multivector<double> out(ctx);
    for (int i = 0; i <= ctx.n(); ++i) {
        auto d = fd_partial(f, x, i, cfg);
        out += i == 0 ? d : Multivector<double>::generator(ctx, i) * d;
    }
    return out;
}

// Central-difference realization of the spherical Dirac operator
// Gamma = -sum_{p+1<=i<j<=p+q} e_i e_j (x_i d_j - x_j d_i).
inline Multivector<double> fd_gamma(const Evaluator& f, const AlgebraContext& ctx,
                                    const std::vector<double>& x, const FDConfig& cfg = {}) {
    Multivector<double> out(ctx);
    for (int i = ctx.p + 1; i <= ctx.n(); ++i)
        for (int j = i + 1; j <= ctx.n(); ++j) {
            auto lij = fd_partial(f, x, j, cfg) * x[i] - fd_partial(f, x, i, cfg) * x[j];
            out -= Multivector<double>::generator(ctx, i) *
                   Multivector<double>::generator(ctx, j) * lij;
        }
    return out;
}

// FD realization of the generalized Cauchy-Riemann system on slice
// evaluators: returns (D_xp F1 - d_r F2, D'_xp F2 + d_r F1) at a slice point
// (x_0..x_p, r).
inline std::pair<Multivector<double>, Multivector<double>> fd_cr_residual(
    const Evaluator& F1, const Evaluator& F2, const AlgebraContext& ctx,
    const std::vector<double>& x, const FDConfig& cfg = {}) {
    const int rv = ctx.p + 1;
    Multivector<double> P1(ctx), P2(ctx);
    for (int i = 0; i <= ctx.p; ++i) {
        auto d1 = fd_partial(F1, x, i, cfg);
        auto d2 = fd_partial(F2, x, i, cfg);
        if (i == 0) {
            P1 += d1;
            P2 += d2;
        } else {
            auto e = Multivector<double>::generator(ctx, i);
            P1 += e * d1;
            P2 -= e * d2;
        }
    }
    P1 -= fd_partial(F2, x, rv, cfg);
    P2 += fd_partial(F1, x, rv, cfg);
    return {P1, P2};
}

// FD realization of the right operator g D'_{x_p} + (d_r g) eta on a slice
// evaluator; coefficients multiply from the right.
inline Multivector<double> fd_right_residual(const Evaluator& g, const AlgebraContext& ctx,
                                             const Multivector<double>& eta,
                                             const std::vector<double>& x,
                                             const FDConfig& cfg = {}) {
    Multivector<double> out = fd_partial(g, x, 0, cfg);
    for (int i = 1; i <= ctx.p; ++i)
        out -= fd_partial(g, x, i, cfg) * Multivector<double>::generator(ctx, i);
    out += fd_partial(g, x, ctx.p + 1, cfg) * eta;
    return out;
}

// FD realization of d_eta = D_{x_p} + eta <eta, D_{x_q}> on full evaluators.
inline Multivector<double> fd_partial_eta(const Evaluator& f, const AlgebraContext& ctx,
                                          const std::vector<double>& eta,
                                          const std::vector<double>& x,
                                          const FDConfig& cfg = {}) {
    Multivector<double> out(ctx);
    for (int i = 0; i <= ctx.p; ++i) {
        auto d = fd_partial(f, x, i, cfg);
        out += i == 0 ? d : Multivector<double>::generator(ctx, i) * d;
    }
    Multivector<double> directional(ctx);
    for (int i = 0; i < ctx.q; ++i) {
        if (eta[i] == 0.0) continue;
        directional += fd_partial(f, x, ctx.p + 1 + i, cfg) * eta[i];
    }
    Multivector<double> eta_mv(ctx);
    for (int i = 0; i < ctx.q; ++i)
        eta_mv += Multivector<double>::generator(ctx, ctx.p + 1 + i) * eta[i];
    return out + eta_mv * directional;
}

inline double max_abs_component(const Multivector<double>& a) {
    double m = 0.0;
    for (BladeIndex b = 0; b < a.dim(); ++b) m = std::max(m, std::abs(a[b]));
    return m;
}

struct CompareResult {
    bool pass;
    double max_error;  // largest component-wise |exact - approx|
};

// Component-wise |delta| <= tol_abs + tol_rel * |exact|.
inline CompareResult compare(const Multivector<double>& exact, const Multivector<double>& approx,
                             double tol_abs, double tol_rel) {
    if (!(exact.ctx() == approx.ctx()))
        throw ContextMismatch("compare: operands have different algebra contexts");
    CompareResult out{true, 0.0};
    for (BladeIndex b = 0; b < exact.dim(); ++b) {
        const double err = std::abs(exact[b] - approx[b]);
        out.max_error = std::max(out.max_error, err);
        if (err > tol_abs + tol_rel * std::abs(exact[b])) out.pass = false;
    }
    return out;
}

}  // namespace gsm
