#pragma once

// Exact rational scalar.  Arbitrary-precision arithmetic is delegated to
// boost::multiprecision; this wrapper fixes the interface the rest of the
// code relies on (string round-trip as "num/den", integrality tests,
// characteristic queries) so nothing else touches the backing type.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "triherm/errors.hpp"

namespace triherm {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rat {
  public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}            // NOLINT: implicit by design
    Rat(std::int64_t n) : v_(n) {}   // NOLINT
    explicit Rat(BigInt n) : v_(std::move(n)) {}
    explicit Rat(BigRat v) : v_(std::move(v)) {}
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DataError("rational with zero denominator");
        v_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
    }

    // Accepts "n" or "n/d"; this is also the emitted form.
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(BigRat(BigInt(s)));
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            return Rat(num, den);
        } catch (const std::runtime_error&) {
            throw DataError("cannot parse rational: " + s);
        }
    }

    std::string str() const {
        const BigInt& d = boost::multiprecision::denominator(v_);
        if (d == 1) return numerator(v_).str();
        return numerator(v_).str() + "/" + d.str();
    }

    BigInt num() const { return numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }

    Rat operator-() const { return Rat(BigRat(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw NonUnit();
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    Rat inverse() const {
        if (is_zero()) throw NonUnit();
        return Rat(BigRat(1) / v_);
    }

    double to_double() const { return v_.convert_to<double>(); }

    // Scalar-concept hooks shared with Fp.
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static constexpr std::uint64_t characteristic() { return 0; }

    const BigRat& raw() const { return v_; }

  private:
    BigRat v_;
};

}  // namespace triherm
