#pragma once
#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "fsp/errors.hpp"

namespace fsp {

/// Element of Z[t,t^-1] localized at (t+t^-1), stored as
/// laurent numerator / (t+t^-1)^k with the numerator not divisible by
/// (t+t^-1) whenever k > 0. Coefficients are rational internally;
/// is_integral() reports membership in Z[t,t^-1].
class Tate {
public:
    using Laurent = std::map<int, mpq_class>;  // exponent of t -> coeff

    Tate() = default;
    Tate(long n) { if (n != 0) num_[0] = n; }
    explicit Tate(const mpq_class& q) {
        mpq_class c(q); c.canonicalize();
        if (c != 0) num_[0] = c;
    }
    Tate(Laurent num, int k) : num_(std::move(num)), k_(k) {
        prune();
        reduce();
    }

    static Tate zero() { return Tate(); }
    static Tate one() { return Tate(1); }
    static Tate from_rational(const mpq_class& q) { return Tate(q); }
    /// c * t^e
    static Tate t_power(int e, const mpq_class& c = 1) {
        Laurent n;
        mpq_class cc(c); cc.canonicalize();
        if (cc != 0) n[e] = cc;
        return Tate(std::move(n), 0);
    }
    /// t + t^-1
    static Tate t_plus_tinv() {
        Laurent n; n[1] = 1; n[-1] = 1;
        return Tate(std::move(n), 0);
    }
    /// 1/(t+t^-1)^k
    static Tate tate_unit_inv(int k) {
        Laurent n; n[0] = 1;
        return Tate(std::move(n), k);
    }

    const Laurent& numerator() const { return num_; }
    int denom_power() const { return k_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const {
        return k_ == 0 && num_.size() == 1 && num_.count(0) && num_.at(0) == 1;
    }
    bool is_integral() const {
        if (k_ != 0) return false;
        for (const auto& [e, c] : num_)
            if (c.get_den() != 1) return false;
        return true;
    }

    bool is_unit() const {
        if (is_zero()) return false;
        Laurent n = num_;
        while (divide_once(n)) {}
        return n.size() == 1;  // +- c * t^a * (t+t^-1)^b
    }

    Tate inv() const {
        if (is_zero()) throw not_invertible_error("Tate zero is not invertible");
        Laurent n = num_;
        int b = 0;
        while (divide_once(n)) ++b;
        if (n.size() != 1)
            throw not_invertible_error("Tate element is not a unit: " + str());
        int a = n.begin()->first;
        mpq_class c = n.begin()->second;
        // inverse of c t^a (t+t^-1)^b / (t+t^-1)^k
        Laurent m;
        m[-a] = 1 / c;
        Tate r(std::move(m), 0);
        if (k_ >= b) {
            Tate p = one();
            for (int j = 0; j < k_ - b; ++j) p = p * t_plus_tinv();
            r = r * p;
        } else {
            r.k_ = b - k_;
            r.reduce();
        }
        return r;
    }

    /// t -> t^-1; (t+t^-1) is fixed so k is unchanged.
    Tate bar() const {
        Laurent n;
        for (const auto& [e, c] : num_) n[-e] = c;
        return Tate(std::move(n), k_);
    }

    Tate operator-() const {
        Tate r(*this);
        for (auto& [e, c] : r.num_) c = -c;
        return r;
    }
    friend Tate operator+(const Tate& a, const Tate& b) {
        // common denominator max(k_a, k_b)
        int k = std::max(a.k_, b.k_);
        Laurent n = scale_up(a.num_, k - a.k_);
        Laurent m = scale_up(b.num_, k - b.k_);
        for (const auto& [e, c] : m) {
            n[e] += c;
            if (n[e] == 0) n.erase(e);
        }
        return Tate(std::move(n), k);
    }
    friend Tate operator-(const Tate& a, const Tate& b) { return a + (-b); }
    friend Tate operator*(const Tate& a, const Tate& b) {
        Laurent n;
        for (const auto& [ea, ca] : a.num_)
            for (const auto& [eb, cb] : b.num_) {
                n[ea + eb] += ca * cb;
                if (n[ea + eb] == 0) n.erase(ea + eb);
            }
        return Tate(std::move(n), a.k_ + b.k_);
    }
    Tate& operator+=(const Tate& o) { *this = *this + o; return *this; }
    Tate& operator-=(const Tate& o) { *this = *this - o; return *this; }
    Tate& operator*=(const Tate& o) { *this = *this * o; return *this; }
    friend bool operator==(const Tate& a, const Tate& b) {
        return a.k_ == b.k_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Tate& a, const Tate& b) { return !(a == b); }

    /// "(laurent)/(t+t^-1)^k", laurent in ascending powers of t.
    std::string str() const {
        std::string body = laurent_str(num_);
        if (k_ == 0) return body;
        std::string denom = "(t+t^-1)";
        if (k_ != 1) denom += "^" + std::to_string(k_);
        return "(" + body + ")/" + denom;
    }

    static std::string laurent_str(const Laurent& n) {
        if (n.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : n) {  // ascending in t
            mpq_class a = abs(c);
            bool neg = c < 0;
            std::string body;
            if (e == 0) body = a.get_str();
            else {
                std::string tp = (e == 1) ? "t" : "t^" + std::to_string(e);
                body = (a == 1) ? tp : a.get_str() + "*" + tp;
            }
            if (first) out += (neg ? "-" : "") + body;
            else out += (neg ? " - " : " + ") + body;
            first = false;
        }
        return out;
    }

private:
    void prune() {
        for (auto it = num_.begin(); it != num_.end();) {
            it->second.canonicalize();
            if (it->second == 0) it = num_.erase(it);
            else ++it;
        }
    }

    // multiply a laurent numerator by (t+t^-1)^j
    static Laurent scale_up(const Laurent& n, int j) {
        Laurent r = n;
        for (int i = 0; i < j; ++i) {
            Laurent s;
            for (const auto& [e, c] : r) {
                s[e + 1] += c;
                s[e - 1] += c;
            }
            for (auto it = s.begin(); it != s.end();)
                it = (it->second == 0) ? s.erase(it) : std::next(it);
            r = std::move(s);
        }
        return r;
    }

    // n /= (t+t^-1) if exactly divisible; returns whether it divided
    static bool divide_once(Laurent& n) {
        if (n.empty()) return false;
        // divide the shifted ordinary polynomial by t^2+1
        int lo = n.begin()->first;
        int hi = n.rbegin()->first;
        // quotient has exponents lo+1 .. hi-1
        Laurent q;
        Laurent r = n;
        for (int e = hi; e >= lo + 2; --e) {
            auto it = r.find(e);
            if (it == r.end()) continue;
            mpq_class c = it->second;
            q[e - 1] += c;
            r.erase(it);
            r[e - 2] -= c;
            if (r[e - 2] == 0) r.erase(e - 2);
        }
        if (!r.empty()) return false;
        n = std::move(q);
        return true;
    }

    void reduce() {
        while (k_ > 0 && !num_.empty()) {
            Laurent n = num_;
            if (!divide_once(n)) break;
            num_ = std::move(n);
            --k_;
        }
        if (num_.empty()) k_ = 0;
    }

    Laurent num_;
    int k_ = 0;
};

inline bool as_rational(const Tate& x, mpq_class& out) {
    if (x.denom_power() != 0) return false;
    if (x.is_zero()) { out = 0; return true; }
    const auto& n = x.numerator();
    if (n.size() != 1 || n.begin()->first != 0) return false;
    out = n.begin()->second;
    return true;
}

} // namespace fsp
