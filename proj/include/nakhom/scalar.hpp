#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <string>

#include "nakhom/errors.hpp"

namespace nakhom {

/* Exact rational scalar (GMP-backed, arbitrary precision).
 * All engine arithmetic is exact; there is no floating point anywhere. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long x) : v_(x) {}  // NOLINT: implicit by design, matrices use literals
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) fail("DivisionByZero", "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail("DivisionByZero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /* Canonical form: "p" for integers, "p/q" otherwise, q > 0, gcd(p,q)=1. */
    std::string str() const { return v_.get_str(); }

    static Rational parse(const std::string& s) { return Rational(s); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/* Prime-field scalar F_p. The modulus is a thread-local computation-scope
 * setting (see FpScope); values themselves stay a single machine word. */
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long x) {  // NOLINT: implicit by design
        const std::uint64_t p = modulus();
        long r = x % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    static std::uint64_t& modulus_ref() {
        thread_local std::uint64_t p = 0;
        return p;
    }
    static std::uint64_t modulus() {
        const std::uint64_t p = modulus_ref();
        if (p == 0) fail_internal("prime-field arithmetic outside an FpScope");
        return p;
    }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ == 0 ? 0 : 1; }

    Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(Fp o) { v_ += o.v_; if (v_ >= modulus()) v_ -= modulus(); return *this; }
    Fp& operator-=(Fp o) { v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + modulus() - o.v_; return *this; }
    Fp& operator*=(Fp o) { v_ = (v_ * o.v_) % modulus(); return *this; }
    Fp& operator/=(Fp o) { *this *= o.inverse(); return *this; }

    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) fail("DivisionByZero", "inverse of zero in F_p");
        // Fermat: p is prime, v^(p-2) = v^-1.
        std::uint64_t base = v_, e = modulus() - 2, acc = 1;
        while (e) {
            if (e & 1) acc = (acc * base) % modulus();
            base = (base * base) % modulus();
            e >>= 1;
        }
        return from_raw(acc);
    }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp from_raw(std::uint64_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    std::uint64_t v_;
};

/* RAII guard installing the prime modulus for the current thread. */
class FpScope {
public:
    explicit FpScope(std::uint64_t p) : prev_(Fp::modulus_ref()) {
        if (p < 2 || p >= (1ull << 31)) fail("InvalidModulus", "prime must be in [2, 2^31)");
        for (std::uint64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) fail("InvalidModulus", std::to_string(p) + " is not prime");
        Fp::modulus_ref() = p;
    }
    ~FpScope() { Fp::modulus_ref() = prev_; }
    FpScope(const FpScope&) = delete;
    FpScope& operator=(const FpScope&) = delete;

private:
    std::uint64_t prev_;
};

/* Algebra-wide field configuration ("Q" or "Fp:<p>"). */
struct FieldSpec {
    enum class Kind { Q, Fp };
    Kind kind = Kind::Q;
    std::uint64_t p = 32003;

    bool is_rational() const { return kind == Kind::Q; }
    std::string str() const { return is_rational() ? "Q" : "Fp:" + std::to_string(p); }

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime_field(std::uint64_t p) { return FieldSpec{Kind::Fp, p}; }
    static FieldSpec parse(const std::string& s) {
        if (s == "Q") return rationals();
        if (s.rfind("Fp:", 0) == 0) return prime_field(std::stoull(s.substr(3)));
        fail("InvalidField", "expected Q or Fp:<p>, got '" + s + "'");
    }
};

}  // namespace nakhom
