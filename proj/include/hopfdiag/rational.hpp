#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hopfdiag {

// Exact rational. Small values stay in int64; anything that overflows is
// promoted to cpp_rational and demoted again when it fits.
class Rat {
public:
    using big_t = boost::multiprecision::cpp_rational;

    Rat() = default;
    Rat(long long v) { set_i128(v, 1); }  // NOLINT(google-explicit-constructor)
    Rat(long long n, long long d) { set_i128(n, d); }

    static Rat from_big(const big_t& b) {
        Rat r;
        r.assign_big(b);
        return r;
    }

    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                boost::multiprecision::cpp_int n(trim(s));
                return from_big(big_t(n));
            }
            boost::multiprecision::cpp_int n(trim(s.substr(0, slash)));
            boost::multiprecision::cpp_int d(trim(s.substr(slash + 1)));
            if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
            return from_big(big_t(n, d));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("bad rational '" + s + "'");
        }
    }

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_small() const { return !big_; }

    big_t to_big() const { return big_ ? *big_ : big_t(n_, d_); }

    int sign() const {
        if (big_) return big_->sign();
        return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
    }

    std::string str() const {
        if (big_) return big_->str();
        if (d_ == 1) return std::to_string(n_);
        return std::to_string(n_) + "/" + std::to_string(d_);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        if (!a.big_ || !b.big_) return false;  // canonical: big never fits int64
        return *a.big_ == *b.big_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    friend bool operator<(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
        return a.to_big() < b.to_big();
    }

    Rat operator-() const {
        if (!big_ && n_ != INT64_MIN) {
            Rat r;
            r.n_ = -n_;
            r.d_ = d_;
            return r;
        }
        return from_big(-to_big());
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (!a.big_ && !b.big_) {
            if (a.d_ == 1 && b.d_ == 1) {
                long long s;
                if (!__builtin_add_overflow(a.n_, b.n_, &s)) return Rat(s);
            }
            __int128 n = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
            __int128 d = static_cast<__int128>(a.d_) * b.d_;
            Rat r;
            if (r.try_set_i128(n, d)) return r;
        }
        return from_big(a.to_big() + b.to_big());
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

    friend Rat operator*(const Rat& a, const Rat& b) {
        if (a.is_zero() || b.is_zero()) return Rat();
        if (a.is_one()) return b;
        if (b.is_one()) return a;
        if (!a.big_ && !b.big_) {
            if (a.d_ == 1 && b.d_ == 1) {
                long long p;
                if (!__builtin_mul_overflow(a.n_, b.n_, &p)) return Rat(p);
            }
            __int128 n = static_cast<__int128>(a.n_) * b.n_;
            __int128 d = static_cast<__int128>(a.d_) * b.d_;
            Rat r;
            if (r.try_set_i128(n, d)) return r;
        }
        return from_big(a.to_big() * b.to_big());
    }

    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return a * b.inverse();
    }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (!big_) {
            Rat r;
            if (n_ < 0) {
                if (n_ == INT64_MIN) return from_big(1 / to_big());
                r.n_ = -d_;
                r.d_ = -n_;
            } else {
                r.n_ = d_;
                r.d_ = n_;
            }
            return r;
        }
        return from_big(1 / *big_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    long long n_ = 0;
    long long d_ = 1;
    std::shared_ptr<const big_t> big_;

    static std::string trim(const std::string& s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty rational");
        std::string t = s.substr(b, e - b + 1);
        if (!t.empty() && t[0] == '+') t = t.substr(1);
        return t;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    bool try_set_i128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
        if (n > INT64_MAX || n < -static_cast<__int128>(INT64_MAX) || d > INT64_MAX) return false;
        n_ = static_cast<long long>(n);
        d_ = static_cast<long long>(d);
        big_.reset();
        return true;
    }

    void set_i128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (!try_set_i128(n, d)) {
            // only reachable from the (n, d) constructor with extreme values
            using boost::multiprecision::cpp_int;
            auto to_int = [](__int128 v) {
                bool neg = v < 0;
                unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
                cpp_int r = static_cast<unsigned long long>(u >> 64);
                r <<= 64;
                r += static_cast<unsigned long long>(u);
                return neg ? cpp_int(-r) : r;
            };
            assign_big(big_t(to_int(n), to_int(d)));
        }
    }

    void assign_big(const big_t& b) {
        using boost::multiprecision::cpp_int;
        const cpp_int& num = boost::multiprecision::numerator(b);
        const cpp_int& den = boost::multiprecision::denominator(b);
        static const cpp_int lim(INT64_MAX);
        if (num <= lim && num >= -lim && den <= lim) {
            n_ = static_cast<long long>(num);
            d_ = static_cast<long long>(den);
            big_.reset();
        } else {
            big_ = std::make_shared<const big_t>(b);
        }
    }
};

}  // namespace hopfdiag
