#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bialg {

/// Thrown when operands from different fields (Q vs F_p, or distinct p) meet.
struct FieldMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar, arbitrary precision, always in lowest terms with
/// positive denominator (maintained by GMP).
class Rational {
public:
    /// Field descriptor; Q carries no parameters.
    struct Field {
        bool operator==(const Field&) const = default;
    };

    Rational() : v_(0) {}
    explicit Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational zero(const Field&) { return Rational(0); }
    static Rational one(const Field&) { return Rational(1); }
    static Rational from_int(const Field&, long n) { return Rational(n); }

    /// Accepts "n", "-n", "a/b" (normalized on load).
    static Rational parse(const Field&, const std::string& s);

    Field field() const { return {}; }
    bool is_zero() const { return v_ == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero in Q");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    /// Total order; used for deterministic sorting, not for pivot magnitude.
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    const mpq_class& raw() const { return v_; }
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rational Rational::parse(const Field&, const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

inline std::string to_string(const Rational& r) { return r.str(); }

/// Prime-field scalar with runtime modulus. Values are canonical residues in
/// [0, p); the modulus travels with each value and binary operations reject
/// mismatched moduli.
class Fp {
public:
    struct Field {
        std::uint64_t p = 0;
        bool operator==(const Field&) const = default;
    };

    Fp() : v_(0), p_(0) {}
    Fp(const Field& f, std::int64_t n) : p_(f.p) {
        check_prime(p_);
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        v_ = static_cast<std::uint64_t>(r);
    }

    static Fp zero(const Field& f) { return Fp(f, 0); }
    static Fp one(const Field& f) { return Fp(f, 1); }
    static Fp from_int(const Field& f, long n) { return Fp(f, n); }

    /// Accepts "n" or "a/b" with b invertible mod p.
    static Fp parse(const Field& f, const std::string& s);

    /// Reduce an exact rational mod p; the denominator must be a unit.
    static Fp from_rational(const Field& f, const Rational& q);

    Field field() const { return {p_}; }
    std::uint64_t residue() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return make(p_, v_ == 0 ? 0 : p_ - v_); }
    Fp operator+(const Fp& o) const { match(o); return make(p_, (v_ + o.v_) % p_); }
    Fp operator-(const Fp& o) const { match(o); return make(p_, (v_ + p_ - o.v_) % p_); }
    Fp operator*(const Fp& o) const { match(o); return make(p_, (v_ * o.v_) % p_); }
    Fp operator/(const Fp& o) const {
        match(o);
        if (o.v_ == 0) throw std::domain_error("division by zero in F_p");
        return *this * o.inverse();
    }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(p_);
        std::int64_t x0 = 1, x1 = 0, r0 = a, r1 = m;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (x0 < 0) x0 += m;
        return make(p_, static_cast<std::uint64_t>(x0));
    }

    bool operator==(const Fp& o) const { match(o); return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    bool operator<(const Fp& o) const { match(o); return v_ < o.v_; }

    std::string str() const { return std::to_string(v_); }

    static void check_prime(std::uint64_t p) {
        if (p < 2) throw std::domain_error("F_p modulus must be a prime >= 2");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::domain_error("F_p modulus " + std::to_string(p) + " is not prime");
        if (p > (1u << 20)) throw std::domain_error("F_p modulus too large for this tool");
    }

private:
    static Fp make(std::uint64_t p, std::uint64_t v) {
        Fp r; r.p_ = p; r.v_ = v; return r;
    }
    void match(const Fp& o) const {
        if (p_ != o.p_) throw FieldMismatch("mixed F_p moduli " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline Fp Fp::parse(const Field& f, const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        try {
            return Fp(f, std::stoll(s));
        } catch (const std::exception&) {
            throw ParseError("bad F_p literal: '" + s + "'");
        }
    }
    Fp num = parse(f, s.substr(0, slash));
    Fp den = parse(f, s.substr(slash + 1));
    return num / den;
}

inline Fp Fp::from_rational(const Field& f, const Rational& q) {
    mpz_class num = q.raw().get_num(), den = q.raw().get_den();
    mpz_class p(static_cast<unsigned long>(f.p));
    mpz_class rn = num % p, rd = den % p;
    if (rn < 0) rn += p;
    if (rd < 0) rd += p;
    Fp n(f, rn.get_si());
    Fp d(f, rd.get_si());
    if (d.is_zero()) throw std::domain_error("denominator not invertible mod p");
    return n / d;
}

inline std::string to_string(const Fp& x) { return x.str(); }

} // namespace bialg
