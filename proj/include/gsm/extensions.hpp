#pragma once

#include <utility>
#include <vector>

#include "gsm/algebra.hpp"
#include "gsm/error.hpp"
#include "gsm/polynomial.hpp"
#include "gsm/slice.hpp"

namespace gsm {

// Restriction data f_0 lives in x_0..x_p only: slice variables, r-free.
inline void require_real_slice(const Poly& f0) {
    if (f0.vars() != VarSet::Slice)
        throw Error("extension data must use slice variables");
    if (f0.degree_in(r_index(f0.ctx())) != 0)
        throw Error("extension data must not depend on r");
}

inline bool is_real_valued(const Poly& f) {
    for (const auto& [e, c] : f.terms())
        for (BladeIndex b = 1; b < c.dim(); ++b)
            if (!(c[b] == Rational(0))) return false;
    return true;
}

// Slice Cauchy-Kovalevskaya extension exp(x_q D_{x_p}) f0, assembled from its
// even/odd split:
//   F1 = sum_k (-1)^k r^{2k}/(2k)!     * Lap_{x_p}^k f0,
//   F2 = sum_k (-1)^k r^{2k+1}/(2k+1)! * Lap_{x_p}^k (D_{x_p} f0).
// The series terminates on polynomials. Output solves the generalized
// Cauchy-Riemann system and restricts to f0 at r = 0.
inline SlicePair ck(const Poly& f0) {
    require_real_slice(f0);
    const auto& ctx = f0.ctx();
    const int rv = r_index(ctx);
    Poly F1(ctx, VarSet::Slice), F2(ctx, VarSet::Slice);
    Poly even = f0;               // Lap^k f0
    Poly odd = dirac_xp(f0);      // Lap^k D f0
    for (int k = 0; !(even.is_zero() && odd.is_zero()); ++k) {
        const Rational sgn = (k % 2 == 0) ? Rational(1) : Rational(-1);
        if (!even.is_zero()) {
            Poly rpow(ctx, VarSet::Slice);
            Exponents e(variable_count(ctx, VarSet::Slice), 0);
            e[rv] = 2 * k;
            rpow.add_term(e, Multivector<Rational>::scalar(ctx, sgn / Rational(factorial(2 * k))));
            F1 += rpow * even;
        }
        if (!odd.is_zero()) {
            Poly rpow(ctx, VarSet::Slice);
            Exponents e(variable_count(ctx, VarSet::Slice), 0);
            e[rv] = 2 * k + 1;
            rpow.add_term(e,
                          Multivector<Rational>::scalar(ctx, sgn / Rational(factorial(2 * k + 1))));
            F2 += rpow * odd;
        }
        even = laplacian_xp(even);
        odd = laplacian_xp(odd);
    }
    return SlicePair{std::move(F1), std::move(F2)};
}

// Right-operator residual g D'_{x_p} + (d_r g) eta with g = F1 + eta F2 the
// restriction of CK[f0] to the eta-slice; coefficients multiply from the
// right. Zero for real-valued f0.
inline Poly ck_right_residual(const Poly& f0, const std::vector<Rational>& eta) {
    require_real_slice(f0);
    if (!is_real_valued(f0)) throw Error("ck_right_residual: f0 must be real-valued");
    if (!is_unit_direction(eta))
        throw Error("ck_right_residual: eta is not a rational unit vector");
    const auto& ctx = f0.ctx();
    const auto eta_mv = eta_vector(ctx, eta);
    SlicePair F = ck(f0);
    Poly g = F.F1 + left_mul(eta_mv, F.F2);
    Poly out = poly_diff(g, 0);  // conj(e_0) = 1
    for (int i = 1; i <= ctx.p; ++i)
        out -= right_mul(poly_diff(g, i), Multivector<Rational>::generator(ctx, i));
    out += right_mul(poly_diff(g, r_index(ctx)), eta_mv);
    return out;
}

namespace detail {

// Coefficient sequence of the generalized CK extension by the two-term
// recursion (2k+q) f_{2k+1} = D_{x_p} f_{2k}, (2k+2) f_{2k+2} = D'_{x_p} f_{2k+1}.
inline std::vector<Poly> gck_recursion_coefficients(const Poly& f0) {
    std::vector<Poly> fk{f0};
    const int q = f0.ctx().q;
    while (!fk.back().is_zero()) {
        const int k = static_cast<int>(fk.size()) - 1;
        if (k % 2 == 0)
            fk.push_back(dirac_xp(fk.back()) * Rational(1, k + q));
        else
            fk.push_back(dirac_xp_conj(fk.back()) * Rational(1, k + 1));
    }
    return fk;
}

// The same coefficients from the closed form, with the Gamma-function ratio
// telescoped into exact rationals:
//   f_{2k}   = Lap^k f0     / (2^k k! q(q+2)...(q+2k-2)),
//   f_{2k+1} = Lap^k D f0   / (2^k k! q(q+2)...(q+2k)).
inline std::vector<Poly> gck_closed_form_coefficients(const Poly& f0, std::size_t count) {
    const int q = f0.ctx().q;
    std::vector<Poly> fk;
    Poly even = f0;
    Poly odd = dirac_xp(f0);
    Int pochhammer = 1;  // q(q+2)...(q+2k-2)
    Int pow2_fact = 1;   // 2^k k!
    for (int k = 0; fk.size() < count; ++k) {
        if (k > 0) {
            pow2_fact *= 2 * k;
            pochhammer *= q + 2 * k - 2;
        }
        fk.push_back(even * Rational(Int(1), pow2_fact * pochhammer));
        if (fk.size() >= count) break;
        fk.push_back(odd * Rational(Int(1), pow2_fact * pochhammer * (q + 2 * k)));
        even = laplacian_xp(even);
        odd = laplacian_xp(odd);
    }
    return fk;
}

// Assembles sum_k x_q^k f_k in slice form, using x_q^{2k} = (-r^2)^k:
//   F1 = sum (-1)^k r^{2k} f_{2k},  F2 = sum (-1)^k r^{2k+1} f_{2k+1}.
inline SlicePair assemble_from_xq_series(const AlgebraContext& ctx, const std::vector<Poly>& fk) {
    const int rv = r_index(ctx);
    Poly F1(ctx, VarSet::Slice), F2(ctx, VarSet::Slice);
    for (std::size_t idx = 0; idx < fk.size(); ++idx) {
        if (fk[idx].is_zero()) continue;
        const int k = static_cast<int>(idx) / 2;
        const Rational sgn = (k % 2 == 0) ? Rational(1) : Rational(-1);
        Poly rpow(ctx, VarSet::Slice);
        Exponents e(variable_count(ctx, VarSet::Slice), 0);
        e[rv] = static_cast<int>(idx);
        rpow.add_term(e, Multivector<Rational>::scalar(ctx, sgn));
        (idx % 2 == 0 ? F1 : F2) += rpow * fk[idx];
    }
    return SlicePair{std::move(F1), std::move(F2)};
}

}  // namespace detail

// Generalized CK extension: the unique monogenic extension of f0 off the real
// slice, GCK[f0] = sum_k x_q^k f_k. Computed by the recursion and cross-checked
// term by term against the closed-form coefficients.
inline SlicePair gck(const Poly& f0) {
    require_real_slice(f0);
    auto rec = detail::gck_recursion_coefficients(f0);
    auto closed = detail::gck_closed_form_coefficients(f0, rec.size());
    for (std::size_t k = 0; k < rec.size(); ++k)
        if (!(rec[k] == closed[k]))
            throw Error("gck: recursion and closed-form coefficients disagree at k=" +
                        std::to_string(k));
    return detail::assemble_from_xq_series(f0.ctx(), rec);
}

// Closed-form route only; kept separate so tests can compare the two paths.
inline SlicePair gck_closed_form(const Poly& f0) {
    require_real_slice(f0);
    auto rec = detail::gck_recursion_coefficients(f0);
    auto closed = detail::gck_closed_form_coefficients(f0, rec.size());
    return detail::assemble_from_xq_series(f0.ctx(), closed);
}

// CK extension for a fixed direction eta:
//   sum_k <eta, x_q>^k / k! (eta D_{x_p})^k f0
// in full variables; monogenic and annihilated by
// d_eta = D_{x_p} + eta <eta, D_{x_q}>.
inline Poly ck_fixed_direction(const Poly& f0, const std::vector<Rational>& eta) {
    require_real_slice(f0);
    if (!is_unit_direction(eta))
        throw Error("ck_fixed_direction: eta is not a rational unit vector");
    const auto& ctx = f0.ctx();
    const auto eta_mv = eta_vector(ctx, eta);

    // <eta, x_q> as a scalar linear polynomial.
    Poly s(ctx, VarSet::Full);
    for (int i = 0; i < ctx.q; ++i) {
        if (eta[i] == 0) continue;
        Exponents e(variable_count(ctx, VarSet::Full), 0);
        e[ctx.p + 1 + i] = 1;
        s.add_term(e, Multivector<Rational>::scalar(ctx, eta[i]));
    }

    Poly out(ctx, VarSet::Full);
    Poly term = lift_real_to_full(f0);  // (eta D_{x_p})^k f0
    Poly s_pow = Poly::constant(ctx, VarSet::Full, Rational(1));
    Int k_fact = 1;
    for (int k = 0; !term.is_zero(); ++k) {
        if (k > 0) {
            k_fact *= k;
            s_pow = s_pow * s;
        }
        out += s_pow * term * Rational(Int(1), k_fact);
        term = left_mul(eta_mv, dirac_xp(term));
    }
    return out;
}

// d_eta f = D_{x_p} f + eta sum_i eta_i d f / dx_{p+i}.
inline Poly partial_eta_apply(const Poly& f, const std::vector<Rational>& eta) {
    if (f.vars() != VarSet::Full) throw Error("partial_eta_apply: full variables required");
    if (!is_unit_direction(eta))
        throw Error("partial_eta_apply: eta is not a rational unit vector");
    const auto& ctx = f.ctx();
    Poly directional(ctx, VarSet::Full);
    for (int i = 0; i < ctx.q; ++i) {
        if (eta[i] == 0) continue;
        directional += poly_diff(f, ctx.p + 1 + i) * eta[i];
    }
    return dirac_xp(f) + left_mul(eta_vector(ctx, eta), directional);
}

// Source data making the CK/GCK diagram commute for odd q:
//   (1/(q-2)!!) (-Lap_{x_p})^{(q-1)/2} f0,
// so that tau_q(CK[f0]) = GCK[fueter_sce_source(f0)].
inline Poly fueter_sce_source(const Poly& f0) {
    require_real_slice(f0);
    const int q = f0.ctx().q;
    if (q % 2 == 0) throw EvenQ("fueter_sce_source: q must be odd");
    Poly out = f0;
    for (int j = 0; j < (q - 1) / 2; ++j) out = -laplacian_xp(out);
    return out * Rational(Int(1), double_factorial(q - 2));
}

}  // namespace gsm
