#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "gsm/algebra.hpp"
#include "gsm/error.hpp"
#include "gsm/polynomial.hpp"

namespace gsm {

// Grammar, whitespace insignificant:
//   expr  := ['-'] term (('+'|'-') term)*
//   term  := factor+
//   factor:= rational | variable ['^' integer] | '[' blade ']'
//   rational := integer ['/' integer]
//   variable := 'x' digits | 'r'          (r only in the slice set)
//   blade := 'e' digits ('e' digits)*     (ascending indices)
// A term takes at most one rational and at most one blade literal, e.g.
//   "x0^2 - r^2 + 2 x0 r [e1]"  or  "3/2 [e1e3] x1".

namespace detail {

struct ExprCursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string read_digits() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected digits", pos);
        return text.substr(start, pos - start);
    }

    int read_small_int() {
        const std::size_t at = pos;
        try {
            return std::stoi(read_digits());
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", at);
        }
    }

    Rational read_rational() {
        Int num(read_digits());
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected denominator after '/'", pos);
            Int den(read_digits());
            if (den == 0) throw ParseError("zero denominator", pos);
            return Rational(num, den);
        }
        return Rational(num);
    }

    int read_variable(const AlgebraContext& ctx, VarSet vars) {
        if (text[pos] == 'r') {
            ++pos;
            if (vars != VarSet::Slice) throw ParseError("variable r is not in this set", pos - 1);
            return r_index(ctx);
        }
        ++pos;  // consume 'x'
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected variable index after 'x'", pos);
        const std::size_t at = pos;
        int index = read_small_int();
        const int limit = vars == VarSet::Full ? ctx.n() : ctx.p;
        if (index < 0 || index > limit)
            throw ParseError("unknown variable x" + std::to_string(index), at);
        return index;
    }

    BladeIndex read_blade(const AlgebraContext& ctx) {
        const std::size_t open = pos;
        ++pos;  // consume '['
        BladeIndex blade = 0;
        int last = 0;
        skip_ws();
        while (pos < text.size() && text[pos] != ']') {
            if (text[pos] != 'e') throw ParseError("expected generator inside blade literal", pos);
            ++pos;
            const std::size_t at = pos;
            int index = read_small_int();
            if (index < 1 || index > ctx.n())
                throw ParseError("unknown blade e" + std::to_string(index), at);
            if (index <= last) throw ParseError("blade indices must be ascending", at);
            last = index;
            blade |= BladeIndex{1} << (index - 1);
            skip_ws();
        }
        if (pos >= text.size()) throw ParseError("unterminated blade literal", open);
        ++pos;  // consume ']'
        return blade;
    }
};

}  // namespace detail

inline Poly parse_polynomial(const std::string& text, const AlgebraContext& ctx, VarSet vars) {
    detail::ExprCursor cur{text};
    Poly out(ctx, vars);
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", cur.pos);
        }
        first = false;

        Rational coeff(1);
        bool saw_number = false;
        bool saw_blade = false;
        BladeIndex blade = 0;
        Exponents exps(variable_count(ctx, vars), 0);
        bool any_factor = false;

        while (true) {
            c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (saw_number) throw ParseError("more than one rational in a term", cur.pos);
                coeff = cur.read_rational();
                saw_number = true;
            } else if (c == 'x' || c == 'r') {
                int var = cur.read_variable(ctx, vars);
                int power = 1;
                if (cur.peek() == '^') {
                    ++cur.pos;
                    cur.skip_ws();
                    if (cur.pos >= cur.text.size() ||
                        !std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
                        throw ParseError("expected exponent after '^'", cur.pos);
                    power = cur.read_small_int();
                }
                exps[var] += power;
            } else if (c == '[') {
                if (saw_blade) throw ParseError("more than one blade literal in a term", cur.pos);
                blade = cur.read_blade(ctx);
                saw_blade = true;
            } else {
                break;
            }
            any_factor = true;
        }
        if (!any_factor) throw ParseError("empty term", cur.pos);

        if (sign < 0) coeff = -coeff;
        out.add_term(exps, Multivector<Rational>::basis(ctx, blade, coeff));
    }
    if (first) throw ParseError("empty expression", 0);
    return out;
}

// Canonical printer; parse_polynomial(to_string(p), ...) == p. Terms are
// emitted in descending lexicographic exponent order, blades ascending.
inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const auto& ctx = f.ctx();
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [exps, coeff] = *it;
        bool has_vars = false;
        for (int e : exps) has_vars |= e != 0;
        for (BladeIndex b = 0; b < coeff.dim(); ++b) {
            if (coeff[b] == Rational(0)) continue;
            const Rational& value = coeff[b];
            const bool negative = value < 0;
            const Rational mag = negative ? Rational(-value) : value;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;

            std::string body;
            if (mag != 1 || (!has_vars && b == 0)) body += rational_to_string(mag);
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (!body.empty()) body += " ";
                body += variable_name(ctx, f.vars(), static_cast<int>(i));
                if (exps[i] > 1) body += "^" + std::to_string(exps[i]);
            }
            if (b != 0) {
                if (!body.empty()) body += " ";
                body += "[" + blade_name(b) + "]";
            }
            out += body;
        }
    }
    return out;
}

}  // namespace gsm
