#pragma once

#include "exchange.hpp"
#include "laurent.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace sbq {

/// Exponent vector of a quantum-torus monomial.
using ExpVec = std::vector<std::int64_t>;

/// Quantum-torus monomial c * Y^alpha. The scalar carries every q-power the
/// normal form Y^alpha accumulates.
struct TorusMonomial {
    LaurentScalar coeff;
    ExpVec alpha;

    TorusMonomial() = default;
    TorusMonomial(LaurentScalar c, ExpVec a) : coeff(std::move(c)), alpha(std::move(a)) {}

    bool operator==(const TorusMonomial& o) const { return coeff == o.coeff && alpha == o.alpha; }
};

/// The quantum torus T(B): q^{<a,b>} Y^a Y^b = Y^{a+b} with
/// <a,b> = -a.B.b. Doubled so the pairing stays integral (it is a t-exponent).
class Torus {
  public:
    explicit Torus(ExchangeMatrix B) : B_(std::move(B)) {}
    const ExchangeMatrix& B() const { return B_; }
    int rank() const { return B_.size(); }

    // 2<a,b> = -2 a.B.b as a t-exponent
    std::int64_t skew2(const ExpVec& a, const ExpVec& b) const {
        std::int64_t s = 0;
        int n = B_.size();
        for (int i = 0; i < n; ++i) {
            if (a[size_t(i)] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (b[size_t(j)] != 0) s += a[size_t(i)] * std::int64_t(B_.b2(i, j)) * b[size_t(j)];
        }
        return -s;
    }

    TorusMonomial gen(int i, std::int64_t pw = 1) const {
        ExpVec a(size_t(rank()), 0);
        a[size_t(i)] = pw;
        return {LaurentScalar::one(), std::move(a)};
    }

    // Y^a Y^b = q^{-<a,b>} Y^{a+b}
    TorusMonomial mul(const TorusMonomial& x, const TorusMonomial& y) const {
        TorusMonomial r;
        r.coeff = x.coeff * y.coeff * LaurentScalar::t_power(-skew2(x.alpha, y.alpha));
        r.alpha.resize(x.alpha.size());
        for (size_t k = 0; k < x.alpha.size(); ++k) r.alpha[k] = x.alpha[k] + y.alpha[k];
        return r;
    }
    // powers are exact: <a,a> = 0
    TorusMonomial pow(const TorusMonomial& x, std::int64_t k) const {
        if (!x.coeff.is_monomial())
            throw std::invalid_argument("Torus::pow: non-monomial coefficient");
        TorusMonomial r;
        const GaussianRational& c = x.coeff.coeff(x.coeff.lo());
        GaussianRational cp(1);
        std::int64_t n = k >= 0 ? k : -k;
        GaussianRational base = k >= 0 ? c : c.inverse();
        for (std::int64_t t = 0; t < n; ++t) cp *= base;
        r.coeff = LaurentScalar::monomial(cp, k * x.coeff.lo());
        r.alpha.resize(x.alpha.size());
        for (size_t t = 0; t < x.alpha.size(); ++t) r.alpha[t] = k * x.alpha[t];
        return r;
    }

    // the q-power relating Y^alpha to the ordered product Y_1^{a_1}...Y_n^{a_n}
    std::int64_t order_correction2(const ExpVec& alpha) const {
        std::int64_t corr = 0;
        int n = rank();
        for (int i = 0; i < n; ++i) {
            if (alpha[size_t(i)] == 0) continue;
            for (int j = i + 1; j < n; ++j)
                if (alpha[size_t(j)] != 0)
                    corr += -alpha[size_t(i)] * std::int64_t(B_.b2(i, j)) * alpha[size_t(j)];
        }
        return corr;
    }

  private:
    ExchangeMatrix B_;
};

/// Finite sum of torus monomials with distinct exponents.
class TorusElement {
  public:
    TorusElement() = default;
    explicit TorusElement(const TorusMonomial& m) { add(m); }

    void add(const TorusMonomial& m) {
        if (m.coeff.is_zero()) return;
        auto it = terms_.find(m.alpha);
        if (it == terms_.end()) {
            terms_.emplace(m.alpha, m.coeff);
        } else {
            it->second += m.coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, LaurentScalar>& terms() const { return terms_; }

    TorusElement operator+(const TorusElement& o) const {
        TorusElement r = *this;
        for (auto& [a, c] : o.terms_) r.add({c, a});
        return r;
    }
    TorusElement operator-() const {
        TorusElement r;
        for (auto& [a, c] : terms_) r.terms_.emplace(a, -c);
        return r;
    }
    TorusElement operator-(const TorusElement& o) const { return *this + (-o); }

    bool operator==(const TorusElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

  private:
    std::map<ExpVec, LaurentScalar> terms_;
};

inline TorusElement multiply(const Torus& T, const TorusElement& x, const TorusElement& y) {
    TorusElement r;
    for (auto& [a, ca] : x.terms())
        for (auto& [b, cb] : y.terms())
            r.add(T.mul({ca, a}, {cb, b}));
    return r;
}

/// True when x commutes with every generator; for monomials this is exactly
/// the kernel condition B.alpha = 0 of the center description.
inline bool is_central(const TorusElement& x, const ExchangeMatrix& B) {
    int n = B.size();
    for (auto& [a, c] : x.terms())
        for (int i = 0; i < n; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < n; ++j) s += std::int64_t(B.b2(i, j)) * a[size_t(j)];
            if (s != 0) return false;
        }
    return true;
}

/// Monomial morphism between quantum tori, given by the images of generators.
/// Construction checks that images preserve the q-commutation of the source.
class TorusMorphism {
  public:
    TorusMorphism(Torus src, Torus tgt, std::vector<TorusMonomial> images, bool check = true)
        : src_(std::move(src)), tgt_(std::move(tgt)), images_(std::move(images)) {
        if (int(images_.size()) != src_.rank())
            throw std::invalid_argument("TorusMorphism: wrong image count");
        if (check) {
            for (int i = 0; i < src_.rank(); ++i)
                for (int j = 0; j < src_.rank(); ++j)
                    if (tgt_.skew2(images_[size_t(i)].alpha, images_[size_t(j)].alpha) !=
                        src_.skew2(unit(i), unit(j)))
                        throw std::invalid_argument("TorusMorphism: commutation not preserved");
        }
    }

    const Torus& source() const { return src_; }
    const Torus& target() const { return tgt_; }
    const TorusMonomial& image(int i) const { return images_[size_t(i)]; }

    TorusMonomial apply(const TorusMonomial& m) const {
        // Y^alpha = q^{corr} * ordered product of generator powers
        TorusMonomial r{m.coeff * LaurentScalar::t_power(src_.order_correction2(m.alpha)),
                        ExpVec(size_t(tgt_.rank()), 0)};
        for (int i = 0; i < src_.rank(); ++i)
            if (m.alpha[size_t(i)] != 0)
                r = tgt_.mul(r, tgt_.pow(images_[size_t(i)], m.alpha[size_t(i)]));
        return r;
    }
    TorusElement apply(const TorusElement& x) const {
        TorusElement r;
        for (auto& [a, c] : x.terms()) r.add(apply({c, a}));
        return r;
    }

    // composition (*this) o g
    TorusMorphism compose(const TorusMorphism& g) const {
        std::vector<TorusMonomial> imgs;
        imgs.reserve(size_t(g.src_.rank()));
        for (int i = 0; i < g.src_.rank(); ++i) imgs.push_back(apply(g.images_[size_t(i)]));
        return {g.src_, tgt_, std::move(imgs), false};
    }

    bool same_images(const TorusMorphism& o) const { return images_ == o.images_; }

  private:
    ExpVec unit(int i) const {
        ExpVec e(size_t(src_.rank()), 0);
        e[size_t(i)] = 1;
        return e;
    }
    Torus src_, tgt_;
    std::vector<TorusMonomial> images_;
};

/// Monomial part tau_{k,eps} of a mutation: FT(mu_k B) -> FT(B),
/// Y'_k -> Y_k^{-1} and Y'_i -> Y^{e_i + [eps b_ik]_+ e_k}.
inline TorusMorphism tau_monomial(const ExchangeMatrix& B, const ExchangeMatrix& Bprime, int k,
                                  int eps) {
    int n = B.size();
    Torus tgt(B), src(Bprime);
    std::vector<TorusMonomial> imgs;
    imgs.reserve(size_t(n));
    for (int i = 0; i < n; ++i) {
        ExpVec a(size_t(n), 0);
        if (i == k) {
            a[size_t(k)] = -1;
        } else {
            int m2 = std::max(0, eps * B.b2(i, k));
            if (m2 % 2 != 0) throw InadmissibleVertex("tau_monomial: half-integer arrow at k");
            a[size_t(i)] = 1;
            a[size_t(k)] = m2 / 2;
        }
        imgs.emplace_back(LaurentScalar::one(), std::move(a));
    }
    return {std::move(src), std::move(tgt), std::move(imgs), false};
}

/// Index-exchange morphism: FT(sigma B) -> FT(B), Y'_i -> Y_{sigma(i)}.
inline TorusMorphism sigma_morphism(const ExchangeMatrix& B, int r, int s) {
    int n = B.size();
    ExchangeMatrix Bp = transpose_indices(B, r, s);
    Torus tgt(B), src(Bp);
    std::vector<TorusMonomial> imgs;
    for (int i = 0; i < n; ++i) {
        int m = i == r ? s : (i == s ? r : i);
        ExpVec a(size_t(n), 0);
        a[size_t(m)] = 1;
        imgs.emplace_back(LaurentScalar::one(), std::move(a));
    }
    return {std::move(src), std::move(tgt), std::move(imgs), false};
}

}  // namespace sbq
