#pragma once

// Prime-field scalar F_p.  Each value carries its modulus so field data can
// flow through the same templates as the exact rationals.  p is restricted
// to odd primes below 2^31: all products of reduced residues then fit in
// uint64 without overflow handling, and characteristic 2 is excluded
// because halving is used throughout.

#include <cstdint>
#include <string>

#include "triherm/errors.hpp"
#include "triherm/rat.hpp"

namespace triherm {

class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}
    static Fp from_int(std::int64_t n, std::uint64_t p) {
        std::int64_t r = n % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    static void check_modulus(std::uint64_t p) {
        if (p < 3 || p % 2 == 0)
            throw BadCharacteristic("modulus must be an odd prime >= 3");
        if (p >= (std::uint64_t{1} << 31))
            throw DataError("modulus too large (must be < 2^31)");
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) throw DataError("modulus is not prime");
    }

    // Accepts "n" (possibly negative) or "n/d" reduced into the field.
    static Fp parse(const std::string& s, std::uint64_t p) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return from_int(std::stoll(s), p);
            Fp num = from_int(std::stoll(s.substr(0, slash)), p);
            Fp den = from_int(std::stoll(s.substr(slash + 1)), p);
            return num / den;
        } catch (const std::logic_error&) {
            throw DataError("cannot parse residue: " + s);
        }
    }

    std::string str() const { return std::to_string(v_); }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return true; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    // values stay reduced, so sums need at most one conditional subtract
    Fp& operator+=(const Fp& o) {
        match(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        match(o);
        v_ += p_ - o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator*=(const Fp& o) { match(o); v_ = (v_ * o.v_) % p_; return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (v_ == 0) throw NonUnit();
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_);
        std::int64_t new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t; std::swap(t, new_t);
            r -= q * new_r; std::swap(r, new_r);
        }
        require_internal(r == 1, "gcd(v, p) != 1 with p prime");
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return Fp(static_cast<std::uint64_t>(t), p_);
    }

  private:
    void match(const Fp& o) const {
        require_internal(p_ == o.p_, "mixed moduli in F_p arithmetic");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

// Sample-carrying constructors: a Rat knows how to make 0/1 statically, an
// Fp value needs its modulus, so generic code builds constants from any
// value of the right field.
inline Rat szero(const Rat&) { return Rat(0); }
inline Rat sone(const Rat&) { return Rat(1); }
inline Rat sfrom(const Rat&, std::int64_t n) { return Rat(n); }
inline Fp szero(const Fp& s) { return Fp(0, s.modulus()); }
inline Fp sone(const Fp& s) { return Fp(1, s.modulus()); }
inline Fp sfrom(const Fp& s, std::int64_t n) { return Fp::from_int(n, s.modulus()); }

}  // namespace triherm
