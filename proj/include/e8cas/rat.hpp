#ifndef E8CAS_RAT_HPP
#define E8CAS_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace e8cas {

using Int = mpz_class;

/// Exact rational scalar backed by GMP. Invariants: always reduced to
/// lowest terms, denominator > 0 (mpq canonical form).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "a" or "a/b" with optional sign, arbitrary precision.
    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(Int(s));
            return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        }
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// The underlying integer; throws unless the value is integral.
    Int to_int() const {
        if (!is_integer()) throw std::domain_error("Rat: not an integer: " + to_string());
        return v_.get_num();
    }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat pow(unsigned long e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
        return Rat(std::move(r), already_canonical_tag{});
    }

    Rat operator-() const { return Rat(mpq_class(-v_), already_canonical_tag{}); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

    const mpq_class& raw() const { return v_; }

private:
    struct already_canonical_tag {};
    Rat(mpq_class q, already_canonical_tag) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

} // namespace e8cas

#endif
