#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gsm/algebra.hpp"
#include "gsm/error.hpp"
#include "gsm/expr.hpp"
#include "gsm/extensions.hpp"
#include "gsm/numeric.hpp"
#include "gsm/polynomial.hpp"
#include "gsm/radon.hpp"
#include "gsm/serialize.hpp"
#include "gsm/slice.hpp"

namespace gsm {

// --- deterministic randomness ----------------------------------------------
//
// All suite randomness is derived from the master seed through splitmix64
// per (cell, trial), so trials are order-independent and a fixed seed yields
// identical reports.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(master ^ (a * 0x9e3779b97f4a7c15ull)) ^ b);
}

// Unbiased bounded draw; avoids the implementation-defined std distributions.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Nonzero rational with numerator in [-9,9] and denominator in {1,2,3}.
inline Rational random_coeff(std::mt19937_64& rng) {
    int num = rand_int(rng, 1, 9);
    if (rand_int(rng, 0, 1)) num = -num;
    return Rational(num, rand_int(rng, 1, 3));
}

inline Multivector<Rational> random_multivector(std::mt19937_64& rng, const AlgebraContext& ctx,
                                                bool real_valued) {
    Multivector<Rational> out(ctx);
    const int blades = real_valued ? 1 : rand_int(rng, 1, 2);
    for (int i = 0; i < blades; ++i) {
        BladeIndex b = real_valued
                           ? 0
                           : static_cast<BladeIndex>(rand_below(rng, ctx.dim()));
        out[b] += random_coeff(rng);
    }
    return out;
}

// Random extension data in x_0..x_p, total degree <= degree.
inline Poly random_real_slice_poly(std::mt19937_64& rng, const AlgebraContext& ctx, int degree,
                                   bool real_valued = false) {
    Poly out(ctx, VarSet::Slice);
    const int nterms = rand_int(rng, 1, 4);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(variable_count(ctx, VarSet::Slice), 0);
        int budget = rand_int(rng, 0, degree);
        for (int u = 0; u < budget; ++u) e[rand_int(rng, 0, ctx.p)] += 1;
        out.add_term(e, random_multivector(rng, ctx, real_valued));
    }
    return out;
}

// Random valid slice pair: F1 even in r, F2 odd in r, total degree <= degree.
inline SlicePair random_slice_pair(std::mt19937_64& rng, const AlgebraContext& ctx, int degree) {
    Poly F1(ctx, VarSet::Slice), F2(ctx, VarSet::Slice);
    const int rv = r_index(ctx);
    const int nterms = rand_int(rng, 1, 3);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(variable_count(ctx, VarSet::Slice), 0);
        e[rv] = 2 * rand_int(rng, 0, degree / 2);
        int budget = rand_int(rng, 0, degree - e[rv]);
        for (int u = 0; u < budget; ++u) e[rand_int(rng, 0, ctx.p)] += 1;
        F1.add_term(e, random_multivector(rng, ctx, false));
    }
    for (int t = 0; t < nterms; ++t) {
        Exponents e(variable_count(ctx, VarSet::Slice), 0);
        e[rv] = 2 * rand_int(rng, 0, (degree - 1) / 2) + 1;
        int budget = rand_int(rng, 0, degree - e[rv]);
        for (int u = 0; u < budget; ++u) e[rand_int(rng, 0, ctx.p)] += 1;
        F2.add_term(e, random_multivector(rng, ctx, false));
    }
    return SlicePair{std::move(F1), std::move(F2)};
}

// The canonical exact unit directions: every +-axis vector, plus the rational
// non-axis point (3/5, 4/5, 0, ...) when q >= 2.
inline std::vector<std::vector<Rational>> standard_eta_set(const AlgebraContext& ctx) {
    std::vector<std::vector<Rational>> out;
    for (int i = 0; i < ctx.q; ++i)
        for (int s : {+1, -1}) {
            std::vector<Rational> eta(ctx.q, Rational(0));
            eta[i] = s;
            out.push_back(std::move(eta));
        }
    if (ctx.q >= 2) {
        std::vector<Rational> eta(ctx.q, Rational(0));
        eta[0] = Rational(3, 5);
        eta[1] = Rational(4, 5);
        out.push_back(std::move(eta));
    }
    return out;
}

inline std::vector<double> random_unit_box_point(std::mt19937_64& rng, int arity) {
    std::vector<double> x(arity);
    for (double& c : x) c = 2.0 * uniform01(rng) - 1.0;
    return x;
}

// --- suite definition -------------------------------------------------------

enum class CheckStatus { ExactPass, NumericPass, Fail };

struct IdentityRecord {
    std::string id;
    std::string anchor;
    bool numeric = false;  // passes carry a max numeric error instead of exactness
    CheckStatus status = CheckStatus::ExactPass;
    std::size_t checks = 0;
    double max_error = 0.0;
    std::string failure;
    double ms = 0.0;
};

struct SuiteConfig {
    std::vector<std::pair<int, int>> grid = {{0, 1}, {0, 3}, {1, 3}, {2, 3}, {1, 5}};
    int degree = 6;
    int trials = 25;
    std::uint64_t seed = 42;
    std::size_t mc_samples = 1000000;
    int fd_points_per_cell = 4;  // 20 points per identity over the default grid
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<IdentityRecord> identities;

    bool all_pass() const {
        for (const auto& rec : identities)
            if (rec.status == CheckStatus::Fail) return false;
        return true;
    }
};

inline std::string format_grid(const std::vector<std::pair<int, int>>& grid) {
    std::string out;
    for (const auto& [p, q] : grid) {
        if (!out.empty()) out += ";";
        out += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return out;
}

inline std::vector<std::pair<int, int>> parse_grid(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ';' || std::isspace(static_cast<unsigned char>(text[pos])))) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw Error("grid: expected '(' in " + text);
        std::size_t close = text.find(')', pos);
        auto comma = text.find(',', pos);
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw Error("grid: malformed cell in " + text);
        int p = std::stoi(text.substr(pos + 1, comma - pos - 1));
        int q = std::stoi(text.substr(comma + 1, close - comma - 1));
        out.emplace_back(p, q);
        pos = close + 1;
    }
    if (out.empty()) throw Error("grid: no cells in " + text);
    return out;
}

namespace detail {

class Accum {
public:
    Accum(std::string id, std::string anchor, bool numeric = false) {
        rec_.id = std::move(id);
        rec_.anchor = std::move(anchor);
        rec_.numeric = numeric;
        rec_.status = numeric ? CheckStatus::NumericPass : CheckStatus::ExactPass;
    }

    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++rec_.checks;
        if (!ok && rec_.status != CheckStatus::Fail) {
            rec_.status = CheckStatus::Fail;
            rec_.failure = describe();
        }
    }

    template <class Describe>
    void expect_near(double error, double tolerance, Describe&& describe) {
        ++rec_.checks;
        rec_.max_error = std::max(rec_.max_error, error);
        if (error > tolerance && rec_.status != CheckStatus::Fail) {
            rec_.status = CheckStatus::Fail;
            rec_.failure = describe();
        }
    }

    void add_ms(double ms) { rec_.ms += ms; }
    IdentityRecord take() { return std::move(rec_); }

private:
    IdentityRecord rec_;
};

class ScopedTimer {
public:
    explicit ScopedTimer(Accum& acc) : acc_(acc), start_(std::chrono::steady_clock::now()) {}
    ~ScopedTimer() {
        const auto stop = std::chrono::steady_clock::now();
        acc_.add_ms(std::chrono::duration<double, std::milli>(stop - start_).count());
    }

private:
    Accum& acc_;
    std::chrono::steady_clock::time_point start_;
};

inline std::string clip(std::string s, std::size_t limit = 160) {
    if (s.size() > limit) {
        s.resize(limit);
        s += "...";
    }
    return s;
}

inline std::string describe_pair_residual(const std::string& where, const Poly& P1,
                                          const Poly& P2) {
    return where + ": residuals (" + clip(to_string(P1)) + ", " + clip(to_string(P2)) + ")";
}

inline std::string describe_poly_residual(const std::string& where, const Poly& P) {
    return where + ": residual " + clip(to_string(P));
}

inline double pair_norm(const SlicePair& F) {
    return coefficient_norm(F.F1) + coefficient_norm(F.F2);
}

inline std::string eta_label(const std::vector<Rational>& eta) {
    std::string s = "(";
    for (std::size_t i = 0; i < eta.size(); ++i) {
        if (i) s += ",";
        s += rational_to_string(eta[i]);
    }
    return s + ")";
}

}  // namespace detail

// Runs the whole identity suite. Each record aggregates all grid cells and
// trials for one criterion; the first violation is kept verbatim.
inline SuiteReport run_verification_suite(const SuiteConfig& cfg) {
    using detail::Accum;
    using detail::ScopedTimer;

    std::vector<Accum> acc;
    acc.emplace_back("ck-generalized-cauchy-riemann",
                     "CK[f0] = exp(x_q D_xp) f0 solves the generalized Cauchy-Riemann system");
    acc.emplace_back("gck-monogenicity",
                     "the generalized CK extension (Bessel-type series) is monogenic");
    acc.emplace_back("fueter-sce-monogenicity",
                     "tau_q = (1/(q-1)!!) Delta^{(q-1)/2} maps slice-regular pairs to monogenic "
                     "functions (odd q)");
    acc.emplace_back("laplacian-power-slice-form",
                     "Delta^k f = C_q(k)((1/r d_r)^k F1 + omega (d_r 1/r)^k F2) with "
                     "C_q(k) = (q-1)(q-3)...(q-2k+1)");
    acc.emplace_back("vekua-monogenicity-equivalence",
                     "a slice-form function is monogenic iff (F1,F2) solves the Vekua-type system");
    acc.emplace_back("spherical-dirac-relation",
                     "Gamma f = (q-1) omega F2 for slice-form functions");
    acc.emplace_back("ck-gck-commutative-diagram",
                     "tau_q(CK[f0]) = GCK[(1/(q-2)!!)(-Lap_xp)^{(q-1)/2} f0]");
    acc.emplace_back("dual-radon-factorization", "GCK = dual Radon transform composed with CK");
    acc.emplace_back("dual-radon-intertwining", "R'[D_omega f] = D_x R'[f]");
    acc.emplace_back("representation-formula",
                     "slice components recovered from any exact unit direction coincide");
    acc.emplace_back("fixed-direction-ck",
                     "CK[f0,eta] is monogenic and annihilated by d_eta = D_xp + eta<eta,D_xq>");
    acc.emplace_back("ck-right-monogenicity",
                     "CK of real-valued data is annihilated by the right slice operator");
    acc.emplace_back("extension-uniqueness-roundtrip",
                     "CK and GCK are determined by their restriction to the real slice");
    acc.emplace_back("sphere-moments-monte-carlo",
                     "normalized Funk-Hecke sphere moments match Monte-Carlo quadrature", true);
    acc.emplace_back("finite-difference-oracle",
                     "central differences confirm every exact zero at unit-box points; "
                     "convergence is second order", true);
    acc.emplace_back("q1-degeneracies", "q = 1 collapse: tau_1 = id, CK = GCK, dual Radon = id");

    for (std::size_t cell = 0; cell < cfg.grid.size(); ++cell) {
        const auto [p, q] = cfg.grid[cell];
        const AlgebraContext ctx(p, q);
        const auto etas = standard_eta_set(ctx);
        const std::string cell_name = "(" + std::to_string(p) + "," + std::to_string(q) + ")";

        for (int trial = 0; trial < cfg.trials; ++trial) {
            std::mt19937_64 rng(mix_seed(cfg.seed, cell, static_cast<std::uint64_t>(trial)));
            const std::string where = "cell " + cell_name + " trial " + std::to_string(trial);

            const Poly f0 = random_real_slice_poly(rng, ctx, cfg.degree);
            const Poly f0_real = random_real_slice_poly(rng, ctx, cfg.degree, true);
            const SlicePair F = random_slice_pair(rng, ctx, cfg.degree);

            const SlicePair ckp = ck(f0);
            const SlicePair gckp = gck(f0);
            const Poly tf_ck = to_full(ckp);
            const Poly tf_gck = to_full(gckp);
            const Poly tf_F = to_full(F);

            {
                ScopedTimer t(acc[0]);
                auto [P1, P2] = cr_residual(ckp);
                acc[0].expect(P1.is_zero() && P2.is_zero(), [&] {
                    return detail::describe_pair_residual(where + ": cr_residual(ck(f0))", P1, P2);
                });
            }
            {
                ScopedTimer t(acc[1]);
                Poly D = dirac_full(tf_gck);
                acc[1].expect(D.is_zero(), [&] {
                    return detail::describe_poly_residual(where + ": dirac_full(to_full(gck(f0)))", D);
                });
            }
            SlicePair taup = tau_q(ckp);
            {
                ScopedTimer t(acc[2]);
                Poly D = dirac_full(to_full(taup));
                acc[2].expect(D.is_zero(), [&] {
                    return detail::describe_poly_residual(
                        where + ": dirac_full(to_full(tau_q(ck(f0))))", D);
                });
            }
            {
                ScopedTimer t(acc[3]);
                Poly lap = tf_ck;
                for (int k = 1; k <= 3; ++k) {
                    lap = laplacian_full(lap);
                    Poly slice_form = to_full(laplacian_power_slice(ckp, k));
                    acc[3].expect(slice_form == lap, [&] {
                        return detail::describe_poly_residual(
                            where + ": Delta^" + std::to_string(k) + " mismatch", slice_form - lap);
                    });
                }
            }
            {
                ScopedTimer t(acc[4]);
                // Cleared form of the D_x decomposition on arbitrary valid pairs.
                auto [P1, P2] = cr_residual(F);
                Poly lifted = P1 + divide_by_r(F.F2) * Rational(1 - q);
                Poly expectation = to_full(make_slice_pair(lifted, P2));
                Poly direct = dirac_full(tf_F);
                acc[4].expect(direct == expectation, [&] {
                    return detail::describe_poly_residual(where + ": D_x decomposition mismatch",
                                                          direct - expectation);
                });
                auto [V1, V2] = vekua_residual(F);
                const bool vekua_zero = V1.is_zero() && V2.is_zero();
                acc[4].expect(vekua_zero == direct.is_zero(), [&] {
                    return where + ": Vekua residual and dirac_full(to_full) disagree on vanishing";
                });
                auto [W1, W2] = vekua_residual(gckp);
                acc[4].expect(W1.is_zero() && W2.is_zero(), [&] {
                    return detail::describe_pair_residual(where + ": vekua_residual(gck(f0))", W1,
                                                          W2);
                });
            }
            {
                ScopedTimer t(acc[5]);
                Poly lhs = gamma_apply(tf_F);
                Poly rhs = to_full(SlicePair{Poly::zero(ctx, VarSet::Slice),
                                             F.F2 * Rational(q - 1)});
                acc[5].expect(lhs == rhs, [&] {
                    return detail::describe_poly_residual(where + ": Gamma relation mismatch",
                                                          lhs - rhs);
                });
            }
            {
                ScopedTimer t(acc[6]);
                SlicePair rhs = gck(fueter_sce_source(f0));
                acc[6].expect(taup == rhs, [&] {
                    return detail::describe_pair_residual(where + ": diagram mismatch",
                                                          taup.F1 - rhs.F1, taup.F2 - rhs.F2);
                });
            }
            {
                ScopedTimer t(acc[7]);
                SlicePair lhs = dual_radon(ckp);
                acc[7].expect(lhs == gckp, [&] {
                    return detail::describe_pair_residual(where + ": dual_radon(ck) != gck",
                                                          lhs.F1 - gckp.F1, lhs.F2 - gckp.F2);
                });
            }
            {
                ScopedTimer t(acc[8]);
                Poly lhs = to_full(dual_radon(dw_slice_apply(F)));
                Poly rhs = dirac_full(to_full(dual_radon(F)));
                acc[8].expect(lhs == rhs, [&] {
                    return detail::describe_poly_residual(where + ": intertwining mismatch",
                                                          lhs - rhs);
                });
            }
            {
                ScopedTimer t(acc[9]);
                for (const auto& eta : etas) {
                    SlicePair back = representation_from_slice(tf_F, eta);
                    acc[9].expect(back == F, [&] {
                        return detail::describe_pair_residual(
                            where + ": representation via eta=" + detail::eta_label(eta),
                            back.F1 - F.F1, back.F2 - F.F2);
                    });
                }
            }
            {
                ScopedTimer t(acc[10]);
                for (const auto& eta : etas) {
                    Poly g = ck_fixed_direction(f0, eta);
                    Poly D = dirac_full(g);
                    acc[10].expect(D.is_zero(), [&] {
                        return detail::describe_poly_residual(
                            where + ": dirac_full(CK[f0,eta]), eta=" + detail::eta_label(eta), D);
                    });
                    Poly E = partial_eta_apply(g, eta);
                    acc[10].expect(E.is_zero(), [&] {
                        return detail::describe_poly_residual(
                            where + ": d_eta CK[f0,eta], eta=" + detail::eta_label(eta), E);
                    });
                }
            }
            {
                ScopedTimer t(acc[11]);
                for (const auto& eta : etas) {
                    Poly R = ck_right_residual(f0_real, eta);
                    acc[11].expect(R.is_zero(), [&] {
                        return detail::describe_poly_residual(
                            where + ": right residual, eta=" + detail::eta_label(eta), R);
                    });
                }
            }
            {
                ScopedTimer t(acc[12]);
                acc[12].expect(ck(restrict_to_real(ckp)) == ckp, [&] {
                    return where + ": ck(restrict_to_real(ck(f0))) != ck(f0)";
                });
                acc[12].expect(gck(restrict_to_real(gckp)) == gckp, [&] {
                    return where + ": gck(restrict_to_real(gck(f0))) != gck(f0)";
                });
            }
            if (q == 1) {
                ScopedTimer t(acc[15]);
                acc[15].expect(taup == ckp, [&] { return where + ": tau_1 is not the identity"; });
                acc[15].expect(ckp == gckp, [&] { return where + ": ck != gck at q=1"; });
                acc[15].expect(dual_radon(F) == F,
                               [&] { return where + ": dual_radon is not the identity at q=1"; });
            }
        }

        // Named value: tau_3 ck(x0^2) = (-2, 0).
        if (q == 3) {
            ScopedTimer t(acc[2]);
            Poly x0sq(ctx, VarSet::Slice);
            Exponents e(variable_count(ctx, VarSet::Slice), 0);
            e[0] = 2;
            x0sq.add_term(e, Multivector<Rational>::scalar(ctx, 1));
            SlicePair expected{Poly::constant(ctx, VarSet::Slice, Rational(-2)),
                               Poly::zero(ctx, VarSet::Slice)};
            acc[2].expect(tau_q(ck(x0sq)) == expected, [&] {
                return "cell " + cell_name + ": tau_3 ck(x0^2) != (-2, 0)";
            });
        }
    }

    // Criterion: normalized moments vs Monte-Carlo quadrature (q = 3).
    {
        ScopedTimer t(acc[13]);
        acc[13].expect(sphere_moment(2, 3) == Rational(1, 3),
                       [] { return std::string("mu_2(3) != 1/3"); });
        acc[13].expect(sphere_moment(4, 3) == Rational(1, 5),
                       [] { return std::string("mu_4(3) != 1/5"); });
        acc[13].expect(sphere_moment(6, 3) == Rational(1, 7),
                       [] { return std::string("mu_6(3) != 1/7"); });
        for (int k = 1; k <= 3; ++k) {
            const auto est = sphere_moment_numeric(2 * k, 3, cfg.mc_samples,
                                                   mix_seed(cfg.seed, 1000, k));
            const double exact = to_double(sphere_moment(2 * k, 3));
            acc[13].expect_near(std::abs(est.estimate - exact), 3.0 * est.std_error, [&] {
                return "mu_" + std::to_string(2 * k) + "(3) Monte-Carlo off by " +
                       std::to_string(std::abs(est.estimate - exact)) + " > 3 se = " +
                       std::to_string(3.0 * est.std_error);
            });
        }
    }

    // Criterion: finite-difference re-verification of the exact zeros.
    {
        ScopedTimer t(acc[14]);
        const FDConfig fd;
        const double tol = 1e-6;
        for (std::size_t cell = 0; cell < cfg.grid.size(); ++cell) {
            const auto [p, q] = cfg.grid[cell];
            const AlgebraContext ctx(p, q);
            std::mt19937_64 rng(mix_seed(cfg.seed, 2000, cell));
            const std::string where = "fd cell (" + std::to_string(p) + "," + std::to_string(q) + ")";

            const Poly f0 = random_real_slice_poly(rng, ctx, cfg.degree);
            const Poly f0_real = random_real_slice_poly(rng, ctx, cfg.degree, true);
            const SlicePair F = random_slice_pair(rng, ctx, cfg.degree);
            const SlicePair ckp = ck(f0);
            const SlicePair gckp = gck(f0);
            const SlicePair taup = tau_q(ckp);
            const auto eta = standard_eta_set(ctx).front();
            std::vector<double> eta_d(eta.size());
            for (std::size_t i = 0; i < eta.size(); ++i) eta_d[i] = to_double(eta[i]);

            const auto ev_ck1 = evaluator_of(ckp.F1);
            const auto ev_ck2 = evaluator_of(ckp.F2);
            const Poly tf_gck = to_full(gckp);
            const auto ev_gck = evaluator_of(tf_gck);
            const Poly tf_tau = to_full(taup);
            const auto ev_tau = evaluator_of(tf_tau);
            const Poly tf_F = to_full(F);
            const auto ev_F = evaluator_of(tf_F);
            const Poly gamma_exact =
                to_full(SlicePair{Poly::zero(ctx, VarSet::Slice), F.F2 * Rational(q - 1)});
            const Poly ckfd = ck_fixed_direction(f0, eta);
            const auto ev_ckfd = evaluator_of(ckfd);
            const SlicePair ckr = ck(f0_real);
            const Poly g_right = ckr.F1 + left_mul(eta_vector(ctx, eta), ckr.F2);
            const auto ev_right = evaluator_of(g_right);
            Multivector<double> eta_mv(ctx);
            for (int i = 0; i < ctx.q; ++i)
                eta_mv += Multivector<double>::generator(ctx, ctx.p + 1 + i) * eta_d[i];

            const double ck_scale = std::max(1.0, detail::pair_norm(ckp));
            const double gck_scale = std::max(1.0, coefficient_norm(tf_gck));
            const double tau_scale = std::max(1.0, coefficient_norm(tf_tau));
            const double F_scale = std::max(1.0, coefficient_norm(tf_F) + coefficient_norm(gamma_exact));
            const double ckfd_scale = std::max(1.0, coefficient_norm(ckfd));
            const double right_scale = std::max(1.0, coefficient_norm(g_right));

            for (int pt = 0; pt < cfg.fd_points_per_cell; ++pt) {
                const auto slice_x = random_unit_box_point(rng, variable_count(ctx, VarSet::Slice));
                const auto full_x = random_unit_box_point(rng, variable_count(ctx, VarSet::Full));

                auto [P1, P2] = fd_cr_residual(ev_ck1, ev_ck2, ctx, slice_x, fd);
                const double cr_err =
                    std::max(max_abs_component(P1), max_abs_component(P2)) / ck_scale;
                acc[14].expect_near(cr_err, tol, [&] {
                    return where + ": fd cr_residual(ck) = " + std::to_string(cr_err);
                });

                const double gck_err =
                    max_abs_component(fd_dirac_full(ev_gck, ctx, full_x, fd)) / gck_scale;
                acc[14].expect_near(gck_err, tol, [&] {
                    return where + ": fd dirac_full(gck) = " + std::to_string(gck_err);
                });

                const double tau_err =
                    max_abs_component(fd_dirac_full(ev_tau, ctx, full_x, fd)) / tau_scale;
                acc[14].expect_near(tau_err, tol, [&] {
                    return where + ": fd dirac_full(tau ck) = " + std::to_string(tau_err);
                });

                const double gamma_err =
                    max_abs_component(fd_gamma(ev_F, ctx, full_x, fd) -
                                      poly_eval(gamma_exact, full_x)) /
                    F_scale;
                acc[14].expect_near(gamma_err, tol, [&] {
                    return where + ": fd Gamma relation = " + std::to_string(gamma_err);
                });

                const double ckfd_err =
                    std::max(max_abs_component(fd_dirac_full(ev_ckfd, ctx, full_x, fd)),
                             max_abs_component(fd_partial_eta(ev_ckfd, ctx, eta_d, full_x, fd))) /
                    ckfd_scale;
                acc[14].expect_near(ckfd_err, tol, [&] {
                    return where + ": fd fixed-direction = " + std::to_string(ckfd_err);
                });

                const double right_err =
                    max_abs_component(fd_right_residual(ev_right, ctx, eta_mv, slice_x, fd)) /
                    right_scale;
                acc[14].expect_near(right_err, tol, [&] {
                    return where + ": fd right residual = " + std::to_string(right_err);
                });
            }

            // Second-order convergence at a case with a constant third
            // derivative: halving h must shrink the error by 4, up to rounding.
            {
                Poly cubic(ctx, VarSet::Slice);
                Exponents e(variable_count(ctx, VarSet::Slice), 0);
                e[0] = 3;
                cubic.add_term(e, Multivector<Rational>::scalar(ctx, 1));
                const Poly f = to_full(ck(cubic));
                const auto ev = evaluator_of(f);
                const Poly df = poly_diff(f, 0);
                for (int pt = 0; pt < cfg.fd_points_per_cell; ++pt) {
                    const auto x = random_unit_box_point(rng, variable_count(ctx, VarSet::Full));
                    const auto exact = poly_eval(df, x);
                    const FDConfig half{fd.h / 2.0};
                    const double err_h =
                        max_abs_component(fd_partial(ev, x, 0, fd) - exact);
                    const double err_h2 =
                        max_abs_component(fd_partial(ev, x, 0, half) - exact);
                    const double factor = err_h2 > 0.0 ? err_h / err_h2 : 4.0;
                    acc[14].expect(factor >= 3.5 && factor <= 4.5, [&] {
                        return where + ": fd convergence factor " + std::to_string(factor) +
                               " outside [3.5, 4.5]";
                    });
                }
            }
        }
    }

    SuiteReport report;
    report.config = cfg;
    for (auto& a : acc) report.identities.push_back(a.take());
    return report;
}

inline Json report_to_json(const SuiteReport& report) {
    Json ids = Json::array();
    for (const auto& rec : report.identities) {
        Json j{{"id", rec.id}, {"anchor", rec.anchor}};
        switch (rec.status) {
            case CheckStatus::ExactPass: j["status"] = "exact-pass"; break;
            case CheckStatus::NumericPass: j["status"] = "numeric-pass"; break;
            case CheckStatus::Fail: j["status"] = "fail"; break;
        }
        j["checks"] = rec.checks;
        if (rec.numeric) j["max_error"] = rec.max_error;
        if (rec.status == CheckStatus::Fail) j["failure"] = rec.failure;
        j["ms"] = rec.ms;
        ids.push_back(std::move(j));
    }
    return Json{{"suite", "generalized-partial-slice-verification"},
                {"grid", format_grid(report.config.grid)},
                {"degree", report.config.degree},
                {"trials", report.config.trials},
                {"seed", report.config.seed},
                {"mc_samples", report.config.mc_samples},
                {"all_pass", report.all_pass()},
                {"identities", ids}};
}

}  // namespace gsm
