#pragma once

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace sbq {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Laurent polynomial in t with Gaussian rational coefficients.
/// t^2 represents q, so every half-integer power of q is an integer power of t.
class LaurentScalar {
  public:
    LaurentScalar() = default;
    explicit LaurentScalar(long v) {
        if (v != 0) {
            lo_ = 0;
            c_ = {GaussianRational(v)};
        }
    }
    explicit LaurentScalar(const GaussianRational& v) {
        if (!v.is_zero()) {
            lo_ = 0;
            c_ = {v};
        }
    }

    static LaurentScalar monomial(const GaussianRational& coeff, long texp) {
        LaurentScalar r;
        if (!coeff.is_zero()) {
            r.lo_ = texp;
            r.c_ = {coeff};
        }
        return r;
    }
    static LaurentScalar t_power(long texp) { return monomial(GaussianRational(1), texp); }
    static LaurentScalar one() { return LaurentScalar(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0].is_one(); }
    long lo() const { return lo_; }                     // lowest t-exponent (undefined when zero)
    long hi() const { return lo_ + long(c_.size()) - 1; }
    bool is_monomial() const { return c_.size() == 1; }

    const GaussianRational& coeff(long texp) const {
        static const GaussianRational zero{};
        if (is_zero() || texp < lo_ || texp > hi()) return zero;
        return c_[size_t(texp - lo_)];
    }

    LaurentScalar operator-() const {
        LaurentScalar r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    LaurentScalar operator+(const LaurentScalar& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        long nlo = std::min(lo_, o.lo_);
        long nhi = std::max(hi(), o.hi());
        LaurentScalar r;
        r.lo_ = nlo;
        r.c_.assign(size_t(nhi - nlo + 1), GaussianRational());
        for (size_t k = 0; k < c_.size(); ++k) r.c_[size_t(lo_ - nlo) + k] += c_[k];
        for (size_t k = 0; k < o.c_.size(); ++k) r.c_[size_t(o.lo_ - nlo) + k] += o.c_[k];
        r.trim();
        return r;
    }
    LaurentScalar operator-(const LaurentScalar& o) const { return *this + (-o); }

    LaurentScalar operator*(const LaurentScalar& o) const {
        if (is_zero() || o.is_zero()) return {};
        LaurentScalar r;
        r.lo_ = lo_ + o.lo_;
        r.c_.assign(c_.size() + o.c_.size() - 1, GaussianRational());
        for (size_t a = 0; a < c_.size(); ++a) {
            if (c_[a].is_zero()) continue;
            for (size_t b = 0; b < o.c_.size(); ++b) {
                if (o.c_[b].is_zero()) continue;
                r.c_[a + b] += c_[a] * o.c_[b];
            }
        }
        r.trim();
        return r;
    }

    LaurentScalar& operator+=(const LaurentScalar& o) {
        *this = *this + o;
        return *this;
    }
    LaurentScalar& operator*=(const LaurentScalar& o) {
        *this = *this * o;
        return *this;
    }

    bool operator==(const LaurentScalar& o) const { return cmp(o); }
    bool operator!=(const LaurentScalar& o) const { return !cmp(o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            long e = lo_ + long(k);
            s += c_[k].str();
            if (e != 0) s += "*t^" + std::to_string(e);
        }
        return s;
    }

  private:
    bool cmp(const LaurentScalar& o) const {
        if (c_.empty() || o.c_.empty()) return c_.empty() && o.c_.empty();
        return lo_ == o.lo_ && c_ == o.c_;
    }
    void trim() {
        size_t b = 0, e = c_.size();
        while (b < e && c_[b].is_zero()) ++b;
        while (e > b && c_[e - 1].is_zero()) --e;
        if (b == e) {
            c_.clear();
            lo_ = 0;
            return;
        }
        if (b > 0 || e < c_.size()) {
            c_ = std::vector<GaussianRational>(c_.begin() + long(b), c_.begin() + long(e));
            lo_ += long(b);
        }
    }
    long lo_ = 0;
    std::vector<GaussianRational> c_;  // no leading/trailing zeros
};

inline bool operator==(const LaurentScalar& a, long b) { return a == LaurentScalar(b); }

// 1 - q^{2j} = 1 - t^{4j}, the building block of (z;q^2)_m denominators
inline LaurentScalar qpoch_factor(long j) {
    return LaurentScalar::one() - LaurentScalar::t_power(4 * j);
}

/// Ratio of Laurent polynomials, kept in the canonical form where the
/// denominator's lowest coefficient is 1 and no common t-power remains.
class RationalScalar {
  public:
    RationalScalar() : num_(), den_(LaurentScalar::one()) {}
    explicit RationalScalar(long v) : num_(v), den_(LaurentScalar::one()) {}
    explicit RationalScalar(LaurentScalar n) : num_(std::move(n)), den_(LaurentScalar::one()) {}
    RationalScalar(LaurentScalar n, LaurentScalar d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw PoleError("RationalScalar: zero denominator");
        canon();
    }

    const LaurentScalar& num() const { return num_; }
    const LaurentScalar& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalScalar operator-() const { return mk(-num_, den_); }
    RationalScalar operator+(const RationalScalar& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    RationalScalar operator-(const RationalScalar& o) const { return *this + (-o); }
    RationalScalar operator*(const RationalScalar& o) const { return {num_ * o.num_, den_ * o.den_}; }
    RationalScalar operator/(const RationalScalar& o) const {
        if (o.is_zero()) throw PoleError("RationalScalar: division by zero");
        return {num_ * o.den_, den_ * o.num_};
    }
    RationalScalar inverse() const { return RationalScalar(1) / *this; }

    // exact equality by cross multiplication; no polynomial gcd needed
    bool operator==(const RationalScalar& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RationalScalar& o) const { return !(*this == o); }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    static RationalScalar mk(LaurentScalar n, LaurentScalar d) {
        RationalScalar r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    void canon() {
        if (num_.is_zero()) {
            den_ = LaurentScalar::one();
            return;
        }
        long shift = std::min(num_.lo(), den_.lo());
        GaussianRational lead = den_.coeff(den_.lo());
        LaurentScalar scale = LaurentScalar::monomial(lead.inverse(), -shift);
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
    LaurentScalar num_, den_;
};

/// (z; q^2)_m for any integer m, where z is a Laurent monomial with unit-like
/// coefficient. Negative m uses (z;q^2)_m = 1 / (z q^{2m}; q^2)_{-m}.
inline RationalScalar qpoch_finite(const LaurentScalar& z, long m) {
    if (!z.is_monomial() && !z.is_zero())
        throw std::invalid_argument("qpoch_finite: argument must be a monomial");
    LaurentScalar p = LaurentScalar::one();
    if (m >= 0) {
        for (long k = 0; k < m; ++k)
            p *= LaurentScalar::one() - z * LaurentScalar::t_power(4 * k);
        return RationalScalar(p);
    }
    for (long k = m; k < 0; ++k) {
        LaurentScalar f = LaurentScalar::one() - z * LaurentScalar::t_power(4 * k);
        if (f.is_zero()) throw PoleError("qpoch_finite: vanishing factor at negative index");
        p *= f;
    }
    return RationalScalar(LaurentScalar::one(), p);
}

/// Fraction with the denominator kept factored as prod_j (1-q^{2j})^{e_j}.
/// Every coefficient arising from quantum dilogarithm expansions lives here;
/// sums stay cheap because the denominator lattice is just exponent-wise max.
class QFrac {
  public:
    QFrac() = default;
    explicit QFrac(long v) : num_(v) {}
    explicit QFrac(LaurentScalar n) : num_(std::move(n)) {}
    QFrac(LaurentScalar n, std::vector<int> den) : num_(std::move(n)), den_(std::move(den)) {
        trim();
    }

    static QFrac one() { return QFrac(1); }
    // 1/(q^2;q^2)_m
    static QFrac inv_qpoch2(int m) {
        QFrac r(LaurentScalar::one());
        r.den_.assign(size_t(m), 1);
        return r;
    }

    bool is_zero() const { return num_.is_zero(); }
    const LaurentScalar& num() const { return num_; }
    const std::vector<int>& den() const { return den_; }

    QFrac operator-() const { return mk(-num_, den_); }
    QFrac operator*(const QFrac& o) const {
        std::vector<int> d = den_;
        if (o.den_.size() > d.size()) d.resize(o.den_.size(), 0);
        for (size_t j = 0; j < o.den_.size(); ++j) d[j] += o.den_[j];
        return mk(num_ * o.num_, std::move(d));
    }
    QFrac operator*(const LaurentScalar& s) const { return mk(num_ * s, den_); }
    QFrac operator+(const QFrac& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        size_t m = std::max(den_.size(), o.den_.size());
        std::vector<int> d(m, 0);
        LaurentScalar a = num_, b = o.num_;
        for (size_t j = 0; j < m; ++j) {
            int e1 = j < den_.size() ? den_[j] : 0;
            int e2 = j < o.den_.size() ? o.den_[j] : 0;
            d[j] = std::max(e1, e2);
            for (int k = e1; k < d[j]; ++k) a *= qpoch_factor(long(j) + 1);
            for (int k = e2; k < d[j]; ++k) b *= qpoch_factor(long(j) + 1);
        }
        return mk(a + b, std::move(d));
    }
    QFrac& operator+=(const QFrac& o) {
        *this = *this + o;
        return *this;
    }

    bool operator==(const QFrac& o) const {
        // cross-multiply by the missing factors only
        LaurentScalar a = num_, b = o.num_;
        size_t m = std::max(den_.size(), o.den_.size());
        for (size_t j = 0; j < m; ++j) {
            int e1 = j < den_.size() ? den_[j] : 0;
            int e2 = j < o.den_.size() ? o.den_[j] : 0;
            for (int k = e1; k < std::max(e1, e2); ++k) a *= qpoch_factor(long(j) + 1);
            for (int k = e2; k < std::max(e1, e2); ++k) b *= qpoch_factor(long(j) + 1);
        }
        return a == b;
    }
    bool operator!=(const QFrac& o) const { return !(*this == o); }

    RationalScalar to_rational() const {
        LaurentScalar d = LaurentScalar::one();
        for (size_t j = 0; j < den_.size(); ++j)
            for (int k = 0; k < den_[j]; ++k) d *= qpoch_factor(long(j) + 1);
        return {num_, d};
    }

  private:
    static QFrac mk(LaurentScalar n, std::vector<int> d) {
        QFrac r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        r.trim();
        return r;
    }
    void trim() {
        if (num_.is_zero()) den_.clear();
        while (!den_.empty() && den_.back() == 0) den_.pop_back();
    }
    LaurentScalar num_;
    std::vector<int> den_;
};

/// Power series in t truncated at a fixed order: coefficients are reported
/// only for exponents strictly below `order`.
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(long order) : order_(order) {}
    TruncatedSeries(long order, const LaurentScalar& p) : order_(order) {
        if (!p.is_zero())
            for (long e = p.lo(); e <= p.hi() && e < order; ++e) set(e, p.coeff(e));
    }

    long order() const { return order_; }
    bool is_zero() const { return c_.empty(); }

    void set(long texp, const GaussianRational& v) {
        if (texp >= order_) return;
        if (v.is_zero())
            c_.erase(texp);
        else
            c_[texp] = v;
    }
    void add(long texp, const GaussianRational& v) {
        if (texp >= order_) return;
        auto it = c_.find(texp);
        if (it == c_.end()) {
            if (!v.is_zero()) c_[texp] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    GaussianRational coeff(long texp) const {
        auto it = c_.find(texp);
        return it == c_.end() ? GaussianRational() : it->second;
    }
    long valuation() const { return c_.empty() ? order_ : c_.begin()->first; }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries r(std::min(order_, o.order_));
        for (auto& [e, v] : c_) r.add(e, v);
        for (auto& [e, v] : o.c_) r.add(e, v);
        return r;
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const {
        TruncatedSeries r(std::min(order_, o.order_));
        for (auto& [e, v] : c_) r.add(e, v);
        for (auto& [e, v] : o.c_) r.add(e, -v);
        return r;
    }
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        TruncatedSeries r(std::min(order_, o.order_));
        for (auto& [e1, v1] : c_)
            for (auto& [e2, v2] : o.c_) {
                if (e1 + e2 >= r.order_) break;
                r.add(e1 + e2, v1 * v2);
            }
        return r;
    }
    bool operator==(const TruncatedSeries& o) const {
        long ord = std::min(order_, o.order_);
        for (auto& [e, v] : c_)
            if (e < ord && v != o.coeff(e)) return false;
        for (auto& [e, v] : o.c_)
            if (e < ord && v != coeff(e)) return false;
        return true;
    }

    const std::map<long, GaussianRational>& coeffs() const { return c_; }

  private:
    long order_ = 0;
    std::map<long, GaussianRational> c_;  // texp -> coeff, all keys < order_
};

/// Multiplicative inverse of a truncated series whose lowest coefficient is a unit.
inline TruncatedSeries series_inverse(const TruncatedSeries& s) {
    if (s.is_zero()) throw NotInvertible("series_inverse: zero series");
    long v = s.valuation();
    GaussianRational lead = s.coeff(v);
    if (lead.is_zero()) throw NotInvertible("series_inverse: vanishing lowest coefficient");
    // with f = lead*t^v*(1+g), invert the geometric tail
    long ord = s.order() - v;  // 1+g is known to order s.order()-v
    TruncatedSeries g(ord);
    GaussianRational linv = lead.inverse();
    for (auto& [e, c] : s.coeffs())
        if (e > v) g.add(e - v, c * linv);
    TruncatedSeries acc(ord), pw(ord);
    acc.set(0, GaussianRational(1));
    pw.set(0, GaussianRational(1));
    for (long k = 1; k < ord && !pw.is_zero(); ++k) {
        pw = pw * g;
        TruncatedSeries term = pw;
        if (k % 2 == 1) term = TruncatedSeries(ord) - term;
        acc = acc + term;
    }
    TruncatedSeries r(s.order() - 2 * v);
    for (auto& [e, c] : acc.coeffs()) r.add(e - v, c * linv);
    return r;
}

}  // namespace sbq
