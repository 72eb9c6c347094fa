#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsm/algebra.hpp"
#include "gsm/error.hpp"
#include "gsm/polynomial.hpp"

namespace gsm {

// (F1, F2) represents the generalized partial-slice function
//     f(x) = F1(x_p, r) + omega * F2(x_p, r),   x = x_p + r*omega,
// with F1 even and F2 odd in r. F2 odd forces F2(x_p, 0) = 0, so omega being
// undefined at r = 0 is harmless.
struct SlicePair {
    Poly F1;
    Poly F2;

    const AlgebraContext& ctx() const { return F1.ctx(); }

    friend bool operator==(const SlicePair&, const SlicePair&) = default;
};

struct PairViolation {
    std::string component;  // "F1" or "F2"
    Exponents exps;
    std::string reason;
};

struct PairReport {
    std::vector<PairViolation> violations;
    bool ok() const { return violations.empty(); }
};

inline PairReport validate_slice_pair(const Poly& F1, const Poly& F2) {
    PairReport report;
    if (!(F1.ctx() == F2.ctx()))
        throw ContextMismatch("slice pair components have different contexts");
    if (F1.vars() != VarSet::Slice || F2.vars() != VarSet::Slice)
        throw Error("slice pair components must use slice variables");
    const int rv = r_index(F1.ctx());
    for (const auto& [e, c] : F1.terms())
        if (e[rv] % 2 != 0) report.violations.push_back({"F1", e, "odd r-power in F1"});
    for (const auto& [e, c] : F2.terms())
        if (e[rv] % 2 != 1) report.violations.push_back({"F2", e, "even r-power in F2"});
    return report;
}

inline SlicePair make_slice_pair(Poly F1, Poly F2) {
    auto report = validate_slice_pair(F1, F2);
    if (!report.ok())
        throw Error("invalid slice pair: " + report.violations.front().reason);
    return SlicePair{std::move(F1), std::move(F2)};
}

inline SlicePair zero_pair(const AlgebraContext& ctx) {
    return SlicePair{Poly::zero(ctx, VarSet::Slice), Poly::zero(ctx, VarSet::Slice)};
}

// --- Dirac-type operators -------------------------------------------------
//
// All operators act on left modules: the generator weight multiplies the
// coefficients from the left. The conjugate operator is fixed as
// D'_{x_p} = d/dx_0 - sum_{i=1}^p e_i d/dx_i, which satisfies
// D'_{x_p} D_{x_p} = Laplacian_{x_p}.

// D_{x_p} f = sum_{i=0}^{p} e_i d f / dx_i. Accepts both variable sets.
inline Poly dirac_xp(const Poly& f) {
    const auto& ctx = f.ctx();
    Poly out(ctx, f.vars());
    for (int i = 0; i <= ctx.p; ++i)
        out += left_mul(Multivector<Rational>::generator(ctx, i), poly_diff(f, i));
    return out;
}

inline Poly dirac_xp_conj(const Poly& f) {
    const auto& ctx = f.ctx();
    Poly out = poly_diff(f, 0);
    for (int i = 1; i <= ctx.p; ++i)
        out -= left_mul(Multivector<Rational>::generator(ctx, i), poly_diff(f, i));
    return out;
}

// D_{x_q} f = sum_{i=p+1}^{p+q} e_i d f / dx_i. Full variables only.
inline Poly dirac_xq(const Poly& f) {
    if (f.vars() != VarSet::Full) throw Error("dirac_xq: full variables required");
    const auto& ctx = f.ctx();
    Poly out(ctx, VarSet::Full);
    for (int i = ctx.p + 1; i <= ctx.n(); ++i)
        out += left_mul(Multivector<Rational>::generator(ctx, i), poly_diff(f, i));
    return out;
}

// The generalized Cauchy-Riemann operator D_x = D_{x_p} + D_{x_q}.
inline Poly dirac_full(const Poly& f) {
    if (f.vars() != VarSet::Full) throw Error("dirac_full: full variables required");
    return dirac_xp(f) + dirac_xq(f);
}

// Laplacian over x_0..x_p; accepts both variable sets.
inline Poly laplacian_xp(const Poly& f) {
    const auto& ctx = f.ctx();
    Poly out(ctx, f.vars());
    for (int i = 0; i <= ctx.p; ++i) out += poly_diff(poly_diff(f, i), i);
    return out;
}

// Coordinate Laplacian over all of x_0..x_{p+q}.
inline Poly laplacian_full(const Poly& f) {
    if (f.vars() != VarSet::Full) throw Error("laplacian_full: full variables required");
    Poly out(f.ctx(), VarSet::Full);
    for (int i = 0; i <= f.ctx().n(); ++i) out += poly_diff(poly_diff(f, i), i);
    return out;
}

// Generalized Cauchy-Riemann system residual:
//   P1 = D_{x_p} F1 - d_r F2,   P2 = D'_{x_p} F2 + d_r F1.
// The pair is slice-regular (GSR) iff both vanish.
inline std::pair<Poly, Poly> cr_residual(const SlicePair& F) {
    const int rv = r_index(F.ctx());
    return {dirac_xp(F.F1) - poly_diff(F.F2, rv), dirac_xp_conj(F.F2) + poly_diff(F.F1, rv)};
}

inline bool is_gsr(const SlicePair& F) {
    auto [P1, P2] = cr_residual(F);
    return P1.is_zero() && P2.is_zero();
}

// Vekua-type system residual with denominators cleared:
//   P1 = r*(D_{x_p} F1 - d_r F2) - (q-1)*F2,   P2 = D'_{x_p} F2 + d_r F1.
// Both vanish iff the represented function is monogenic.
inline std::pair<Poly, Poly> vekua_residual(const SlicePair& F) {
    const auto& ctx = F.ctx();
    const int rv = r_index(ctx);
    Poly r_poly = Poly::variable(ctx, VarSet::Slice, rv);
    Poly P1 = r_poly * (dirac_xp(F.F1) - poly_diff(F.F2, rv)) - F.F2 * Rational(ctx.q - 1);
    Poly P2 = dirac_xp_conj(F.F2) + poly_diff(F.F1, rv);
    return {P1, P2};
}

// (1/r d_r) g for g even in r; exact polynomial division replaces the limit
// at r = 0. The result is again even.
inline Poly r_inv_dr(const Poly& g) {
    if (!is_even_in_r(g)) throw NotDivisible("r_inv_dr: input not even in r");
    return divide_by_r(poly_diff(g, r_index(g.ctx())));
}

// (d_r 1/r) h for h odd in r; result odd.
inline Poly dr_rinv(const Poly& h) {
    if (!is_odd_in_r(h)) throw NotDivisible("dr_rinv: input not odd in r");
    return poly_diff(divide_by_r(h), r_index(h.ctx()));
}

// C_q(k) = (q-1)(q-3)...(q-2k+1); empty product at k = 0.
inline Rational cq_factor(int q, int k) {
    Rational c(1);
    for (int j = 1; j <= k; ++j) c *= Rational(q - 2 * j + 1);
    return c;
}

// Slice form of Delta_x^k f for a slice-regular pair:
//   ( C_q(k) (1/r d_r)^k F1,  C_q(k) (d_r 1/r)^k F2 ).
inline SlicePair laplacian_power_slice(const SlicePair& F, int k) {
    if (k < 0) throw Error("laplacian_power_slice: negative power");
    if (!is_gsr(F))
        throw NotGSR("laplacian_power_slice: pair does not solve the generalized Cauchy-Riemann system");
    Poly A = F.F1;
    Poly B = F.F2;
    for (int j = 0; j < k; ++j) {
        A = r_inv_dr(A);
        B = dr_rinv(B);
    }
    const Rational c = cq_factor(F.ctx().q, k);
    return SlicePair{A * c, B * c};
}

// Fueter-Sce map for odd q: ((1/r d_r)^{(q-1)/2} F1, (d_r 1/r)^{(q-1)/2} F2),
// i.e. Delta_x^{(q-1)/2} f normalized by 1/(q-1)!!. Output is monogenic.
inline SlicePair tau_q(const SlicePair& F) {
    const int q = F.ctx().q;
    if (q % 2 == 0) throw EvenQ("tau_q: q must be odd");
    if (!is_gsr(F))
        throw NotGSR("tau_q: pair does not solve the generalized Cauchy-Riemann system");
    Poly A = F.F1;
    Poly B = F.F2;
    for (int j = 0; j < (q - 1) / 2; ++j) {
        A = r_inv_dr(A);
        B = dr_rinv(B);
    }
    return SlicePair{std::move(A), std::move(B)};
}

// The vector part x_q = sum_{i>p} x_i e_i as a full-variables polynomial.
inline Poly xq_vector_poly(const AlgebraContext& ctx) {
    Poly out(ctx, VarSet::Full);
    for (int i = ctx.p + 1; i <= ctx.n(); ++i) {
        Exponents e(variable_count(ctx, VarSet::Full), 0);
        e[i] = 1;
        out.add_term(e, Multivector<Rational>::generator(ctx, i));
    }
    return out;
}

// f(x) = G1(x_p, |x_q|^2) + x_q * G2(x_p, |x_q|^2) where F1 = G1(x_p, r^2)
// and F2 = r * G2(x_p, r^2). The even/odd parity makes both substitutions
// exact.
inline Poly to_full(const SlicePair& F) {
    auto report = validate_slice_pair(F.F1, F.F2);
    if (!report.ok()) throw Error("to_full: " + report.violations.front().reason);
    Poly G1 = r_square_substitute(F.F1);
    if (F.F2.is_zero()) return G1;
    Poly G2 = r_square_substitute(divide_by_r(F.F2));
    return G1 + xq_vector_poly(F.ctx()) * G2;
}

// Restriction to the real slice r = 0; F2 contributes nothing by oddness.
inline Poly restrict_to_real(const SlicePair& F) {
    return restrict_r_to_zero(F.F1);
}

// Spherical Dirac operator on the q-range variables:
//   Gamma f = -sum_{p+1 <= i < j <= p+q} e_i e_j (x_i d_j - x_j d_i) f.
inline Poly gamma_apply(const Poly& f) {
    if (f.vars() != VarSet::Full) throw Error("gamma_apply: full variables required");
    const auto& ctx = f.ctx();
    Poly out(ctx, VarSet::Full);
    for (int i = ctx.p + 1; i <= ctx.n(); ++i) {
        Poly xi = Poly::variable(ctx, VarSet::Full, i);
        for (int j = i + 1; j <= ctx.n(); ++j) {
            Poly xj = Poly::variable(ctx, VarSet::Full, j);
            Poly lij = xi * poly_diff(f, j) - xj * poly_diff(f, i);
            auto eij = Multivector<Rational>::generator(ctx, i) *
                       Multivector<Rational>::generator(ctx, j);
            out -= left_mul(eij, lij);
        }
    }
    return out;
}

inline bool is_unit_direction(const std::vector<Rational>& eta) {
    Rational s(0);
    for (const auto& v : eta) s += v * v;
    return s == 1;
}

// eta as the Clifford vector sum_i eta_i e_{p+i}.
inline Multivector<Rational> eta_vector(const AlgebraContext& ctx,
                                        const std::vector<Rational>& eta) {
    if (static_cast<int>(eta.size()) != ctx.q)
        throw Error("direction vector arity mismatch");
    Multivector<Rational> out(ctx);
    for (int i = 0; i < ctx.q; ++i)
        out += Multivector<Rational>::generator(ctx, ctx.p + 1 + i) * eta[i];
    return out;
}

// Representation formula: recovers the slice components from a function in
// full variables via any exact unit direction eta,
//   F1 = (f(x_p + r eta) + f(x_p - r eta)) / 2,
//   F2 = eta (f(x_p - r eta) - f(x_p + r eta)) / 2.
// For f = to_full(F) this returns F for every unit eta.
inline SlicePair representation_from_slice(const Poly& f, const std::vector<Rational>& eta) {
    if (f.vars() != VarSet::Full)
        throw Error("representation_from_slice: full variables required");
    if (!is_unit_direction(eta))
        throw Error("representation_from_slice: eta is not a rational unit vector");
    Poly plus = substitute_xq_with_r_eta(f, eta, +1);
    Poly minus = substitute_xq_with_r_eta(f, eta, -1);
    const Rational half(1, 2);
    Poly F1 = (plus + minus) * half;
    Poly F2 = left_mul(eta_vector(f.ctx(), eta), minus - plus) * half;
    return make_slice_pair(std::move(F1), std::move(F2));
}

}  // namespace gsm
