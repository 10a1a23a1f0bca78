#pragma once
#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fsp/errors.hpp"
#include "fsp/rational.hpp"

namespace fsp {

/// "Natural" parameter order: alphabetic stem, then numeric suffix,
/// so m2 < m10 and a11 < a12 < a22.
inline bool param_name_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        long num = (i < s.size()) ? std::stol(s.substr(i)) : -1;
        return std::pair<std::string, long>(s.substr(0, i), num);
    };
    auto [sa, na] = split(a);
    auto [sb, nb] = split(b);
    if (sa != sb) return sa < sb;
    return na < nb;
}

/// Multivariate polynomial over Q in named parameters (a11, mu1, beta, ...),
/// kept rewrite-normal: a13 is eagerly replaced by (2/3)(a22 - a11*a12),
/// the degree-4 Lazard relation read over Q.
class ParamPoly {
public:
    // parameter name -> exponent; absent means 0
    using Mono = std::map<std::string, int>;

    ParamPoly() = default;
    ParamPoly(long n) { if (n != 0) terms_[Mono{}] = n; }
    explicit ParamPoly(const mpq_class& q) {
        mpq_class c(q); c.canonicalize();
        if (c != 0) terms_[Mono{}] = c;
    }

    static ParamPoly zero() { return ParamPoly(); }
    static ParamPoly one() { return ParamPoly(1); }
    static ParamPoly from_rational(const mpq_class& q) { return ParamPoly(q); }

    /// A single parameter as a ring element (rewrite applied, so
    /// param("a13") comes back as (2/3)a22 - (2/3)a11*a12).
    static ParamPoly param(const std::string& name, int exp = 1) {
        ParamPoly p;
        Mono m; m[name] = exp;
        p.terms_[m] = 1;
        p.rewrite();
        return p;
    }

    const std::map<Mono, mpq_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() &&
               terms_.begin()->second == 1;
    }
    bool is_unit() const { return is_constant() && !is_zero(); }

    mpq_class constant_term() const {
        auto it = terms_.find(Mono{});
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    ParamPoly inv() const {
        if (!is_unit())
            throw not_invertible_error("ParamPoly not a unit: " + str());
        return ParamPoly(mpq_class(1 / terms_.begin()->second));
    }

    ParamPoly operator-() const {
        ParamPoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m = ma;
                for (const auto& [name, e] : mb) m[name] += e;
                r.add_term(m, ca * cb);
            }
        r.rewrite();
        return r;
    }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) {
        return !(a == b);
    }

    /// Substitute rational values for some parameters (used by the
    /// specialization tests, e.g. a11 = -beta, a12 = 0).
    ParamPoly specialize(const std::map<std::string, mpq_class>& vals) const {
        ParamPoly r;
        for (const auto& [m, c] : terms_) {
            mpq_class coef = c;
            Mono rest;
            for (const auto& [name, e] : m) {
                auto it = vals.find(name);
                if (it == vals.end()) { rest[name] = e; continue; }
                mpq_class v(1);
                for (int j = 0; j < e; ++j) v *= it->second;
                coef *= v;
            }
            r.add_term(rest, coef);
        }
        r.rewrite();
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        // print by lex order on the naturally sorted parameter list
        std::vector<std::pair<Mono, mpq_class>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
            return mono_print_less(x.first, y.first);
        });
        std::string out;
        bool first = true;
        for (const auto& [m, c] : ts) {
            mpq_class a = abs(c);
            bool neg = c < 0;
            std::string body;
            if (m.empty()) {
                body = a.get_str();
            } else {
                if (a != 1) body = a.get_str() + "*";
                bool fm = true;
                std::vector<std::pair<std::string, int>> ps(m.begin(), m.end());
                std::sort(ps.begin(), ps.end(), [](const auto& x, const auto& y) {
                    return param_name_less(x.first, y.first);
                });
                for (const auto& [name, e] : ps) {
                    if (!fm) body += "*";
                    fm = false;
                    body += name;
                    if (e != 1) body += "^" + std::to_string(e);
                }
            }
            if (first) out += (neg ? "-" : "") + body;
            else out += (neg ? " - " : " + ") + body;
            first = false;
        }
        return out;
    }

private:
    void add_term(const Mono& m, const mpq_class& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            mpq_class v(c); v.canonicalize();
            if (v != 0) terms_.emplace(m, v);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // a13^e -> ((2/3)(a22 - a11*a12))^e
    void rewrite() {
        for (;;) {
            auto hit = terms_.end();
            for (auto it = terms_.begin(); it != terms_.end(); ++it)
                if (it->first.count("a13")) { hit = it; break; }
            if (hit == terms_.end()) return;
            Mono m = hit->first;
            mpq_class c = hit->second;
            int e = m.at("a13");
            m.erase("a13");
            terms_.erase(hit);
            ParamPoly repl;
            {
                Mono m22; m22["a22"] = 1;
                Mono m1112; m1112["a11"] = 1; m1112["a12"] = 1;
                repl.terms_[m22] = mpq_class(2, 3);
                repl.terms_[m1112] = mpq_class(-2, 3);
            }
            ParamPoly acc(1);
            for (int j = 0; j < e; ++j) acc = acc * repl;  // repl is a13-free
            for (const auto& [mr, cr] : acc.terms_) {
                Mono mm = m;
                for (const auto& [name, ee] : mr) mm[name] += ee;
                add_term(mm, c * cr);
            }
        }
    }

    static bool mono_print_less(const Mono& x, const Mono& y) {
        // exponent-vector lex over the union of names in natural order
        std::vector<std::string> names;
        for (const auto& [n, e] : x) names.push_back(n);
        for (const auto& [n, e] : y) names.push_back(n);
        std::sort(names.begin(), names.end(), param_name_less);
        names.erase(std::unique(names.begin(), names.end()), names.end());
        for (const auto& n : names) {
            auto ix = x.find(n), iy = y.find(n);
            int ex = ix == x.end() ? 0 : ix->second;
            int ey = iy == y.end() ? 0 : iy->second;
            if (ex != ey) return ex > ey;
        }
        return false;
    }

    std::map<Mono, mpq_class> terms_;
};

inline bool as_rational(const ParamPoly& x, mpq_class& out) {
    if (!x.is_constant()) return false;
    out = x.constant_term();
    return true;
}

} // namespace fsp
