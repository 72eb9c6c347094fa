#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gsm/algebra.hpp"
#include "gsm/error.hpp"
#include "gsm/rational.hpp"

namespace gsm {

// Two variable sets, both determined by the algebra context:
//   Full  -> x_0, ..., x_{p+q}          (arity n+1)
//   Slice -> x_0, ..., x_p, r           (arity p+2)
enum class VarSet { Full, Slice };

inline int variable_count(const AlgebraContext& ctx, VarSet vars) {
    return vars == VarSet::Full ? ctx.n() + 1 : ctx.p + 2;
}

// Index of r in the Slice set.
inline int r_index(const AlgebraContext& ctx) { return ctx.p + 1; }

inline std::string variable_name(const AlgebraContext& ctx, VarSet vars, int index) {
    if (vars == VarSet::Slice && index == r_index(ctx)) return "r";
    return "x" + std::to_string(index);
}

// Exponent vector, densely stored; arity matches the variable set.
using Exponents = std::vector<int>;

// Multivariate polynomial in commuting real variables with Multivector
// coefficients. Coefficients sit on the left of monomials; all the
// noncommutativity lives in the coefficients. No zero coefficient is stored.
template <class S>
class CliffordPolynomial {
public:
    using Coeff = Multivector<S>;
    using TermMap = std::map<Exponents, Coeff>;

    CliffordPolynomial(AlgebraContext ctx, VarSet vars) : ctx_(ctx), vars_(vars) {}

    static CliffordPolynomial zero(AlgebraContext ctx, VarSet vars) {
        return CliffordPolynomial(ctx, vars);
    }

    static CliffordPolynomial constant(AlgebraContext ctx, VarSet vars, const Coeff& c) {
        CliffordPolynomial out(ctx, vars);
        out.add_term(Exponents(variable_count(ctx, vars), 0), c);
        return out;
    }

    static CliffordPolynomial constant(AlgebraContext ctx, VarSet vars, const S& value) {
        return constant(ctx, vars, Coeff::scalar(ctx, value));
    }

    static CliffordPolynomial variable(AlgebraContext ctx, VarSet vars, int index) {
        if (index < 0 || index >= variable_count(ctx, vars))
            throw Error("variable index out of range");
        CliffordPolynomial out(ctx, vars);
        Exponents e(variable_count(ctx, vars), 0);
        e[index] = 1;
        out.add_term(e, Coeff::scalar(ctx, S(1)));
        return out;
    }

    const AlgebraContext& ctx() const { return ctx_; }
    VarSet vars() const { return vars_; }
    int arity() const { return variable_count(ctx_, vars_); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& exps, const Coeff& c) {
        if (static_cast<int>(exps.size()) != arity())
            throw Error("polynomial term arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(exps, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CliffordPolynomial& operator+=(const CliffordPolynomial& rhs) {
        require_compatible(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    CliffordPolynomial& operator-=(const CliffordPolynomial& rhs) {
        require_compatible(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    CliffordPolynomial operator-() const {
        CliffordPolynomial out(ctx_, vars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    CliffordPolynomial& operator*=(const S& s) {
        if (s == S(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) {
        return a += b;
    }
    friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) {
        return a -= b;
    }
    friend CliffordPolynomial operator*(CliffordPolynomial a, const S& s) { return a *= s; }
    friend CliffordPolynomial operator*(const S& s, CliffordPolynomial a) { return a *= s; }

    friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
        a.require_compatible(b);
        CliffordPolynomial out(a.ctx_, a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
        return a.ctx_ == b.ctx_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    int degree_in(int var) const {
        int deg = 0;
        for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
        return deg;
    }

    int total_degree() const {
        int deg = 0;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int m : e) d += m;
            deg = std::max(deg, d);
        }
        return deg;
    }

private:
    void require_compatible(const CliffordPolynomial& other) const {
        if (!(ctx_ == other.ctx_) || vars_ != other.vars_)
            throw ContextMismatch("polynomial operands differ in context or variable set");
    }

    AlgebraContext ctx_;
    VarSet vars_;
    TermMap terms_;
};

// Left action of a Clifford element on every coefficient; the substrate for
// operators of the form sum_i e_i d/dx_i acting on left modules.
template <class S>
CliffordPolynomial<S> left_mul(const Multivector<S>& a, const CliffordPolynomial<S>& f) {
    CliffordPolynomial<S> out(f.ctx(), f.vars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, a * c);
    return out;
}

template <class S>
CliffordPolynomial<S> right_mul(const CliffordPolynomial<S>& f, const Multivector<S>& a) {
    CliffordPolynomial<S> out(f.ctx(), f.vars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, c * a);
    return out;
}

// Formal partial derivative, coefficient-wise.
template <class S>
CliffordPolynomial<S> poly_diff(const CliffordPolynomial<S>& f, int var) {
    if (var < 0 || var >= f.arity()) throw Error("poly_diff: unknown variable index");
    CliffordPolynomial<S> out(f.ctx(), f.vars());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) continue;
        Exponents d(e);
        d[var] -= 1;
        out.add_term(d, c * S(e[var]));
    }
    return out;
}

using Poly = CliffordPolynomial<Rational>;

// --- exact slice-variable machinery (symbolic paths are rational-only) ---

// f = r * result, exactly. Hard error when any term has r-exponent 0: the
// parity invariants of slice pairs guarantee divisibility wherever the
// function theory takes limits.
inline Poly divide_by_r(const Poly& f) {
    if (f.vars() != VarSet::Slice) throw Error("divide_by_r: slice variables required");
    const int rv = r_index(f.ctx());
    Poly out(f.ctx(), f.vars());
    for (const auto& [e, c] : f.terms()) {
        if (e[rv] == 0) throw NotDivisible("divide_by_r: term with r-exponent 0");
        Exponents d(e);
        d[rv] -= 1;
        out.add_term(d, c);
    }
    return out;
}

// Splits f by the parity of the r-exponent; even + odd = f, term sets disjoint.
inline std::pair<Poly, Poly> parity_split_in_r(const Poly& f) {
    if (f.vars() != VarSet::Slice) throw Error("parity_split_in_r: slice variables required");
    const int rv = r_index(f.ctx());
    Poly even(f.ctx(), f.vars()), odd(f.ctx(), f.vars());
    for (const auto& [e, c] : f.terms()) (e[rv] % 2 == 0 ? even : odd).add_term(e, c);
    return {even, odd};
}

inline bool is_even_in_r(const Poly& f) {
    const int rv = r_index(f.ctx());
    for (const auto& [e, c] : f.terms())
        if (e[rv] % 2 != 0) return false;
    return true;
}

inline bool is_odd_in_r(const Poly& f) {
    const int rv = r_index(f.ctx());
    for (const auto& [e, c] : f.terms())
        if (e[rv] % 2 != 1) return false;
    return true;
}

// |x_q|^2 = sum_{i=p+1}^{p+q} x_i^2 as a full-variables polynomial.
inline Poly xq_norm_squared(const AlgebraContext& ctx) {
    Poly out(ctx, VarSet::Full);
    for (int i = ctx.p + 1; i <= ctx.n(); ++i) {
        Exponents e(variable_count(ctx, VarSet::Full), 0);
        e[i] = 2;
        out.add_term(e, Multivector<Rational>::scalar(ctx, 1));
    }
    return out;
}

// Replaces r^{2k} by (sum_{i>p} x_i^2)^k, carrying the x_p variables over.
// Input must be even in r.
inline Poly r_square_substitute(const Poly& g) {
    if (g.vars() != VarSet::Slice) throw Error("r_square_substitute: slice variables required");
    const auto& ctx = g.ctx();
    const int rv = r_index(ctx);
    const Poly rho2 = xq_norm_squared(ctx);
    std::vector<Poly> rho2_pow{Poly::constant(ctx, VarSet::Full, Rational(1))};
    Poly out(ctx, VarSet::Full);
    for (const auto& [e, c] : g.terms()) {
        if (e[rv] % 2 != 0)
            throw OddPowerPresent("r_square_substitute: odd r-power present");
        const int k = e[rv] / 2;
        while (static_cast<int>(rho2_pow.size()) <= k)
            rho2_pow.push_back(rho2_pow.back() * rho2);
        Exponents full(variable_count(ctx, VarSet::Full), 0);
        for (int i = 0; i <= ctx.p; ++i) full[i] = e[i];
        Poly mono(ctx, VarSet::Full);
        mono.add_term(full, c);
        out += mono * rho2_pow[k];
    }
    return out;
}

// Embeds a polynomial in x_0..x_p (slice variables, r-free) into full variables.
inline Poly lift_real_to_full(const Poly& f) {
    if (f.vars() != VarSet::Slice) throw Error("lift_real_to_full: slice variables required");
    const auto& ctx = f.ctx();
    const int rv = r_index(ctx);
    Poly out(ctx, VarSet::Full);
    for (const auto& [e, c] : f.terms()) {
        if (e[rv] != 0) throw Error("lift_real_to_full: input depends on r");
        Exponents full(variable_count(ctx, VarSet::Full), 0);
        for (int i = 0; i <= ctx.p; ++i) full[i] = e[i];
        out.add_term(full, c);
    }
    return out;
}

// Substitutes x_{p+i} -> sign * r * eta_i into a full-variables polynomial,
// producing a slice-variables polynomial. eta has q rational entries.
inline Poly substitute_xq_with_r_eta(const Poly& f, const std::vector<Rational>& eta, int sign) {
    if (f.vars() != VarSet::Full) throw Error("substitute_xq_with_r_eta: full variables required");
    const auto& ctx = f.ctx();
    if (static_cast<int>(eta.size()) != ctx.q)
        throw Error("substitute_xq_with_r_eta: direction arity mismatch");
    Poly out(ctx, VarSet::Slice);
    for (const auto& [e, c] : f.terms()) {
        Rational factor(1);
        int rpow = 0;
        for (int i = 0; i < ctx.q; ++i) {
            const int m = e[ctx.p + 1 + i];
            rpow += m;
            for (int j = 0; j < m; ++j) factor *= eta[i];
        }
        if (sign < 0 && rpow % 2 != 0) factor = -factor;
        if (factor == 0) continue;
        Exponents se(variable_count(ctx, VarSet::Slice), 0);
        for (int i = 0; i <= ctx.p; ++i) se[i] = e[i];
        se[r_index(ctx)] = rpow;
        out.add_term(se, c * factor);
    }
    return out;
}

// Sets r to zero (keeps the slice variable set).
inline Poly restrict_r_to_zero(const Poly& f) {
    if (f.vars() != VarSet::Slice) throw Error("restrict_r_to_zero: slice variables required");
    const int rv = r_index(f.ctx());
    Poly out(f.ctx(), f.vars());
    for (const auto& [e, c] : f.terms())
        if (e[rv] == 0) out.add_term(e, c);
    return out;
}

// Direct evaluation; rational coefficients become doubles at the boundary.
template <class S>
Multivector<double> poly_eval(const CliffordPolynomial<S>& f, const std::vector<double>& point) {
    if (static_cast<int>(point.size()) != f.arity())
        throw Error("poly_eval: point arity mismatch");
    Multivector<double> acc(f.ctx());
    for (const auto& [e, c] : f.terms()) {
        double m = 1.0;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) m *= point[i];
        if constexpr (std::is_same_v<S, double>) {
            acc += c * m;
        } else {
            acc += to_double_mv(c) * m;
        }
    }
    return acc;
}

inline CliffordPolynomial<double> to_double_poly(const Poly& f) {
    CliffordPolynomial<double> out(f.ctx(), f.vars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, to_double_mv(c));
    return out;
}

// Sum of the absolute values of all coefficient components: a bound for |f|
// on the unit box, used for scale-aware numeric tolerances.
inline double coefficient_norm(const Poly& f) {
    double s = 0.0;
    for (const auto& [e, c] : f.terms())
        for (BladeIndex b = 0; b < c.dim(); ++b) s += std::abs(to_double(c[b]));
    return s;
}

}  // namespace gsm
