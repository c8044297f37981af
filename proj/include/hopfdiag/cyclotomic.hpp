#pragma once

#include "rational.hpp"

#include <boost/container/small_vector.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace hopfdiag {

// Data for Q(zeta_N): the cyclotomic polynomial Phi_N and zeta^k mod Phi_N.
struct CycloField {
    int order = 1;                            // N
    int degree = 1;                           // phi(N)
    std::vector<long long> phi_poly;          // Phi_N, ascending, monic, size degree+1
    std::vector<std::vector<long long>> zpow; // zeta^k reduced, k in [0, N)

    static const CycloField& get(int n) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<CycloField>> cache;
        if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
        auto f = std::make_unique<CycloField>();
        f->build(n);
        auto& ref = *f;
        cache.emplace(n, std::move(f));
        return ref;
    }

private:
    static std::vector<long long> poly_div_exact(std::vector<long long> num, const std::vector<long long>& den) {
        // den monic
        int dn = static_cast<int>(den.size()) - 1;
        int nn = static_cast<int>(num.size()) - 1;
        std::vector<long long> q(nn - dn + 1, 0);
        for (int k = nn; k >= dn; --k) {
            long long c = num[k];
            q[k - dn] = c;
            if (c == 0) continue;
            for (int j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
        }
        return q;
    }

    static std::vector<long long> cyclo_poly(int n, std::map<int, std::vector<long long>>& memo) {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        std::vector<long long> p(n + 1, 0);
        p[0] = -1;
        p[n] = 1;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) p = poly_div_exact(p, cyclo_poly(d, memo));
        memo[n] = p;
        return p;
    }

    void build(int n) {
        std::map<int, std::vector<long long>> memo;
        order = n;
        phi_poly = cyclo_poly(n, memo);
        degree = static_cast<int>(phi_poly.size()) - 1;
        zpow.assign(n, std::vector<long long>(degree, 0));
        std::vector<long long> cur(degree, 0);
        cur[0] = 1;
        for (int k = 0; k < n; ++k) {
            zpow[k] = cur;
            // multiply by x and reduce
            long long top = cur[degree - 1];
            for (int j = degree - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top != 0)
                for (int j = 0; j < degree; ++j) cur[j] -= top * phi_poly[j];
        }
    }
};

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
// Arithmetic between different N promotes to the lcm field.
class Scalar {
public:
    using coeffs_t = boost::container::small_vector<Rat, 4>;

    Scalar() : f_(&CycloField::get(1)), c_(1) {}
    Scalar(const Rat& r) : f_(&CycloField::get(1)), c_(1, r) {}  // NOLINT(google-explicit-constructor)
    Scalar(long long v) : Scalar(Rat(v)) {}                      // NOLINT(google-explicit-constructor)

    static Scalar zero(int n) {
        Scalar s;
        s.f_ = &CycloField::get(n);
        s.c_.assign(s.f_->degree, Rat());
        return s;
    }
    static Scalar constant(int n, const Rat& r) {
        Scalar s = zero(n);
        s.c_[0] = r;
        return s;
    }
    // zeta_n^k
    static Scalar zeta(int n, long long k) {
        Scalar s = zero(n);
        long long e = ((k % n) + n) % n;
        const auto& zp = s.f_->zpow[e];
        for (int j = 0; j < s.f_->degree; ++j) s.c_[j] = Rat(zp[j]);
        return s;
    }
    // sum_k c[k] zeta_n^k for any length of c
    static Scalar from_coeffs(int n, const std::vector<Rat>& c) {
        Scalar s = zero(n);
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k].is_zero()) continue;
            const auto& zp = s.f_->zpow[k % n];
            for (int j = 0; j < s.f_->degree; ++j)
                if (zp[j] != 0) s.c_[j] += c[k] * Rat(zp[j]);
        }
        return s;
    }

    int field() const { return f_->order; }
    int degree() const { return f_->degree; }
    const coeffs_t& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& r : c_)
            if (!r.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!c_[0].is_one()) return false;
        for (size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }

    // Embed into Q(zeta_m), m a multiple of field().
    Scalar promote(int m) const {
        if (m == f_->order) return *this;
        if (m % f_->order != 0) throw std::invalid_argument("promote: field order does not divide target");
        int step = m / f_->order;
        Scalar s = zero(m);
        for (int k = 0; k < f_->degree; ++k) {
            if (c_[k].is_zero()) continue;
            const auto& zp = s.f_->zpow[(static_cast<long long>(k) * step) % m];
            for (int j = 0; j < s.f_->degree; ++j)
                if (zp[j] != 0) s.c_[j] += c_[k] * Rat(zp[j]);
        }
        return s;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.f_ == b.f_) return a.c_ == b.c_;
        int m = std::lcm(a.f_->order, b.f_->order);
        return a.promote(m).c_ == b.promote(m).c_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar operator-() const {
        Scalar s = *this;
        for (auto& r : s.c_) r = -r;
        return s;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.f_ != b.f_) return binary_promoted(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
        Scalar s = a;
        for (size_t j = 0; j < s.c_.size(); ++j) s.c_[j] += b.c_[j];
        return s;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.f_ != b.f_) return binary_promoted(a, b, [](const Scalar& x, const Scalar& y) { return x * y; });
        if (a.is_one()) return b;
        if (b.is_one()) return a;
        const int deg = a.f_->degree;
        if (deg == 1) {
            Scalar s = a;
            s.c_[0] = a.c_[0] * b.c_[0];
            return s;
        }
        boost::container::small_vector<Rat, 8> prod(2 * deg - 1);
        bool any = false;
        for (int i = 0; i < deg; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j < deg; ++j) {
                if (b.c_[j].is_zero()) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
                any = true;
            }
        }
        Scalar s = zero(a.f_->order);
        if (!any) return s;
        const auto& phi = a.f_->phi_poly;
        for (int k = 2 * deg - 2; k >= deg; --k) {
            if (prod[k].is_zero()) continue;
            Rat c = prod[k];
            for (int j = 0; j <= deg; ++j)
                if (phi[j] != 0) prod[k - deg + j] -= c * Rat(phi[j]);
        }
        for (int j = 0; j < deg; ++j) s.c_[j] = prod[j];
        return s;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Solves (a * x = 1) by Gaussian elimination on the multiplication matrix.
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero scalar");
        const int deg = f_->degree;
        if (deg == 1) return Scalar::constant(f_->order, c_[0].inverse());
        // column j of M = coefficients of a * zeta^j
        std::vector<std::vector<Rat>> m(deg, std::vector<Rat>(deg + 1));
        Scalar col = *this;
        Scalar z = zeta(f_->order, 1);
        for (int j = 0; j < deg; ++j) {
            for (int i = 0; i < deg; ++i) m[i][j] = col.c_[i];
            col = col * z;
        }
        m[0][deg] = Rat(1);
        for (int c = 0; c < deg; ++c) {
            int piv = -1;
            for (int r = c; r < deg; ++r)
                if (!m[r][c].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::domain_error("singular multiplication matrix");
            std::swap(m[c], m[piv]);
            Rat inv = m[c][c].inverse();
            for (int k = c; k <= deg; ++k) m[c][k] *= inv;
            for (int r = 0; r < deg; ++r) {
                if (r == c || m[r][c].is_zero()) continue;
                Rat f = m[r][c];
                for (int k = c; k <= deg; ++k) m[r][k] -= f * m[c][k];
            }
        }
        Scalar s = zero(f_->order);
        for (int i = 0; i < deg; ++i) s.c_[i] = m[i][deg];
        return s;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar pow(long long e) const {
        Scalar base = e < 0 ? inverse() : *this;
        unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
        Scalar r = constant(f_->order, Rat(1));
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    // Rational values print as "a/b"; others as "zeta<N>:[c0,c1,...]".
    std::string str() const {
        if (is_rational()) return c_[0].str();
        std::ostringstream os;
        os << "zeta" << f_->order << ":[";
        for (size_t j = 0; j < c_.size(); ++j) os << (j ? "," : "") << c_[j].str();
        os << "]";
        return os.str();
    }

    static Scalar parse(const std::string& s) {
        auto colon = s.find(':');
        if (colon == std::string::npos) return Scalar(Rat::parse(s));
        if (s.rfind("zeta", 0) != 0) throw std::invalid_argument("bad scalar '" + s + "'");
        int n = std::stoi(s.substr(4, colon - 4));
        auto lb = s.find('[', colon), rb = s.find(']', colon);
        if (lb == std::string::npos || rb == std::string::npos) throw std::invalid_argument("bad scalar '" + s + "'");
        std::vector<Rat> c;
        std::stringstream ss(s.substr(lb + 1, rb - lb - 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) c.push_back(Rat::parse(tok));
        return from_coeffs(n, c);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    const CycloField* f_;
    coeffs_t c_;

    template <class F>
    static Scalar binary_promoted(const Scalar& a, const Scalar& b, F op) {
        int m = std::lcm(a.f_->order, b.f_->order);
        return op(a.promote(m), b.promote(m));
    }
};

}  // namespace hopfdiag
