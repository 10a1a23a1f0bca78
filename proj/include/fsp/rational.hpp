#pragma once
#include <gmpxx.h>
#include <string>

#include "fsp/errors.hpp"

namespace fsp {

/// Exact rational coefficient ring (arbitrary precision, always canonical:
/// lowest terms, positive denominator -- gmp keeps that invariant for us).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }
    static Rat from_rational(const mpq_class& q) { return Rat(q); }

    const mpq_class& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_unit() const { return v_ != 0; }
    bool is_integral() const { return v_.get_den() == 1; }

    Rat inv() const {
        if (is_zero()) throw not_invertible_error("division by zero rational");
        return Rat(1 / v_);
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    /// Canonical grammar: "p/q" or "n".
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

/// Rational content extraction (used by the transition-matrix solver, whose
/// per-degree pivots must be plain rationals).
inline bool as_rational(const Rat& x, mpq_class& out) {
    out = x.value();
    return true;
}

} // namespace fsp
