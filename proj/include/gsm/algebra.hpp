#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gsm/error.hpp"
#include "gsm/rational.hpp"

namespace gsm {

// Real Clifford algebra R_{p+q} on n = p+q anticommuting generators with
// e_i^2 = -1. e_0 is the scalar unit, not a generator; paravectors
// (grades 0 and 1) are identified with R^{n+1}. The (p, q) split singles
// out x_p = sum_{i<=p} x_i e_i and the vector part x_q = sum_{i>p} x_i e_i.
struct AlgebraContext {
    int p = 0;
    int q = 1;

    static constexpr int max_generators = 12;  // dense storage is 2^n scalars

    AlgebraContext() = default;
    AlgebraContext(int p_, int q_) : p(p_), q(q_) {
        if (p < 0) throw Error("algebra context: p must be nonnegative");
        if (q < 1) throw Error("algebra context: q must be positive");
        if (p + q > max_generators)
            throw Error("algebra context: p+q exceeds the generator cap of " +
                        std::to_string(max_generators));
    }

    int n() const { return p + q; }
    std::size_t dim() const { return std::size_t{1} << n(); }

    friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;
};

// Basis blade e_A as a bitmask: bit i set means generator e_{i+1} is present.
// Mask 0 is the scalar unit.
using BladeIndex = std::uint32_t;

inline int grade(BladeIndex blade) { return std::popcount(blade); }

struct BladeProduct {
    int sign;  // +1 or -1
    BladeIndex blade;
};

// Product of two basis blades. The result is the symmetric difference of the
// generator sets; the sign counts the transpositions needed to interleave the
// two ascending generator lists, plus one factor -1 per contracted pair
// (e_i e_i = -1). A bubble-sort transposition count gives the same answer and
// serves as the test oracle.
inline BladeProduct blade_product(BladeIndex a, BladeIndex b) {
    int flips = 0;
    for (BladeIndex t = a >> 1; t != 0; t >>= 1) flips += std::popcount(t & b);
    flips += std::popcount(a & b);
    return {(flips & 1) ? -1 : +1, a ^ b};
}

// Clifford conjugation sign on a grade-k blade: (-1)^{k(k+1)/2}.
inline int conjugation_sign(int k) { return ((k * (k + 1) / 2) % 2) ? -1 : +1; }

// "" for the scalar unit, otherwise "e1e3" style with ascending indices.
inline std::string blade_name(BladeIndex blade) {
    std::string name;
    for (int i = 1; blade != 0; ++i, blade >>= 1)
        if (blade & 1) name += "e" + std::to_string(i);
    return name;
}

inline BladeIndex parse_blade_name(const std::string& name, const AlgebraContext& ctx) {
    BladeIndex blade = 0;
    int last = 0;
    std::size_t pos = 0;
    while (pos < name.size()) {
        if (name[pos] != 'e') throw Error("malformed blade name: " + name);
        ++pos;
        std::size_t start = pos;
        while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
        if (start == pos) throw Error("malformed blade name: " + name);
        int index = std::stoi(name.substr(start, pos - start));
        if (index < 1 || index > ctx.n())
            throw Error("unknown blade generator e" + std::to_string(index));
        if (index <= last) throw Error("blade indices must be ascending: " + name);
        last = index;
        blade |= BladeIndex{1} << (index - 1);
    }
    return blade;
}

// Dense Clifford number: 2^n scalar components indexed by blade mask.
// S is the scalar kind: Rational on symbolic paths, double on oracle paths.
template <class S>
class Multivector {
public:
    explicit Multivector(AlgebraContext ctx) : ctx_(ctx), coeff_(ctx.dim(), S(0)) {}

    static Multivector scalar(AlgebraContext ctx, const S& value) {
        Multivector out(ctx);
        out.coeff_[0] = value;
        return out;
    }

    static Multivector basis(AlgebraContext ctx, BladeIndex blade, const S& value = S(1)) {
        Multivector out(ctx);
        if (blade >= ctx.dim()) throw Error("blade index out of range for context");
        out.coeff_[blade] = value;
        return out;
    }

    // The generator e_index (1-based); e_0 yields the scalar unit.
    static Multivector generator(AlgebraContext ctx, int index) {
        if (index == 0) return scalar(ctx, S(1));
        if (index < 0 || index > ctx.n())
            throw Error("generator index out of range: e" + std::to_string(index));
        return basis(ctx, BladeIndex{1} << (index - 1));
    }

    const AlgebraContext& ctx() const { return ctx_; }
    std::size_t dim() const { return coeff_.size(); }

    const S& operator[](BladeIndex blade) const { return coeff_[blade]; }
    S& operator[](BladeIndex blade) { return coeff_[blade]; }

    bool is_zero() const {
        for (const auto& c : coeff_)
            if (!(c == S(0))) return false;
        return true;
    }

    const S& scalar_part() const { return coeff_[0]; }

    Multivector grade_part(int k) const {
        Multivector out(ctx_);
        for (BladeIndex b = 0; b < coeff_.size(); ++b)
            if (grade(b) == k) out.coeff_[b] = coeff_[b];
        return out;
    }

    bool is_paravector() const {
        for (BladeIndex b = 0; b < coeff_.size(); ++b)
            if (grade(b) > 1 && !(coeff_[b] == S(0))) return false;
        return true;
    }

    Multivector conjugated() const {
        Multivector out(ctx_);
        for (BladeIndex b = 0; b < coeff_.size(); ++b)
            out.coeff_[b] = conjugation_sign(grade(b)) < 0 ? -coeff_[b] : coeff_[b];
        return out;
    }

    Multivector& operator+=(const Multivector& rhs) {
        require_same_ctx(rhs);
        for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
        return *this;
    }

    Multivector& operator-=(const Multivector& rhs) {
        require_same_ctx(rhs);
        for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
        return *this;
    }

    Multivector& operator*=(const S& s) {
        for (auto& c : coeff_) c *= s;
        return *this;
    }

    Multivector operator-() const {
        Multivector out(ctx_);
        for (std::size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = -coeff_[i];
        return out;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
    friend Multivector operator*(const S& s, Multivector a) { return a *= s; }

    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.require_same_ctx(b);
        Multivector out(a.ctx_);
        const auto dim = a.coeff_.size();
        for (BladeIndex i = 0; i < dim; ++i) {
            if (a.coeff_[i] == S(0)) continue;
            for (BladeIndex j = 0; j < dim; ++j) {
                if (b.coeff_[j] == S(0)) continue;
                auto [sign, blade] = blade_product(i, j);
                if (sign > 0)
                    out.coeff_[blade] += a.coeff_[i] * b.coeff_[j];
                else
                    out.coeff_[blade] -= a.coeff_[i] * b.coeff_[j];
            }
        }
        return out;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.ctx_ == b.ctx_ && a.coeff_ == b.coeff_;
    }

private:
    void require_same_ctx(const Multivector& other) const {
        if (!(ctx_ == other.ctx_))
            throw ContextMismatch("multivector operands have different algebra contexts");
    }

    AlgebraContext ctx_;
    std::vector<S> coeff_;
};

template <class S>
Multivector<S> clifford_conjugate(const Multivector<S>& a) {
    return a.conjugated();
}

// x^{-1} = conj(x) / |x|^2 for a nonzero paravector x.
template <class S>
Multivector<S> paravector_inverse(const Multivector<S>& x) {
    if (!x.is_paravector()) throw Error("paravector_inverse: input has grade > 1 components");
    S norm2(0);
    for (int i = 0; i <= x.ctx().n(); ++i) {
        BladeIndex b = i == 0 ? 0 : BladeIndex{1} << (i - 1);
        norm2 += x[b] * x[b];
    }
    if (norm2 == S(0)) throw Error("paravector_inverse: zero paravector");
    Multivector<S> out = x.conjugated();
    for (BladeIndex b = 0; b < out.dim(); ++b) out[b] /= norm2;
    return out;
}

inline Multivector<double> to_double_mv(const Multivector<Rational>& a) {
    Multivector<double> out(a.ctx());
    for (BladeIndex b = 0; b < a.dim(); ++b) out[b] = to_double(a[b]);
    return out;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Multivector<S>& a) {
    bool first = true;
    for (BladeIndex b = 0; b < a.dim(); ++b) {
        if (a[b] == S(0)) continue;
        if (!first) os << " + ";
        os << a[b];
        if (b != 0) os << "*" << blade_name(b);
        first = false;
    }
    if (first) os << "0";
    return os;
}

// A point of R^{p+q+1} in full coordinates (x_0, ..., x_{p+q}).
struct PointFull {
    std::vector<double> coords;
};

struct SplitPoint {
    std::vector<double> xp;                    // (x_0, ..., x_p)
    double r = 0.0;                            // |x_q|
    std::optional<std::vector<double>> omega;  // x_q / r; absent when r = 0
};

// x = x_p + r*omega with r >= 0; omega is not defined at r = 0.
inline SplitPoint split_point(const PointFull& v, const AlgebraContext& ctx) {
    if (static_cast<int>(v.coords.size()) != ctx.n() + 1)
        throw Error("split_point: coordinate arity mismatch");
    SplitPoint out;
    out.xp.assign(v.coords.begin(), v.coords.begin() + ctx.p + 1);
    double sq = 0.0;
    for (int i = ctx.p + 1; i <= ctx.n(); ++i) sq += v.coords[i] * v.coords[i];
    out.r = std::sqrt(sq);
    if (out.r > 0.0) {
        std::vector<double> dir(ctx.q);
        for (int i = 0; i < ctx.q; ++i) dir[i] = v.coords[ctx.p + 1 + i] / out.r;
        out.omega = std::move(dir);
    }
    return out;
}

}  // namespace gsm
