#pragma once

#include "qtorus.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sbq {

/// Decomposition signs (eps_1, .., eps_4) attached to the four mutations of a
/// cluster-transformation block.
using SignTuple = std::array<int, 4>;

inline std::string sign_str(const SignTuple& s) {
    std::string r;
    for (int e : s) r += e > 0 ? '+' : '-';
    return r;
}

/// One cluster-transformation block: four mutation vertices followed by two
/// index exchanges (all labels 1-based).
struct TauBlock {
    std::array<int, 4> mu;
    std::array<std::pair<int, int>, 2> sigma;
};

inline const TauBlock& rhat_block_10() {
    static const TauBlock b{{4, 3, 5, 8}, {{{3, 5}, {4, 8}}}};
    return b;
}

// blocks of the left path (tau_{124|..} .. tau_{456|..}) on the 17-vertex quiver
inline const std::array<TauBlock, 4>& te_left_blocks() {
    static const std::array<TauBlock, 4> b{{{{14, 13, 15, 8}, {{{13, 15}, {8, 14}}}},
                                            {{7, 6, 15, 3}, {{{6, 15}, {3, 7}}}},
                                            {{12, 11, 8, 3}, {{{8, 11}, {3, 12}}}},
                                            {{14, 11, 13, 6}, {{{11, 13}, {6, 14}}}}}};
    return b;
}

// blocks of the right path (tau'_{456|..} .. tau'_{124|..})
inline const std::array<TauBlock, 4>& te_right_blocks() {
    static const std::array<TauBlock, 4> b{{{{12, 11, 13, 6}, {{{11, 13}, {6, 12}}}},
                                            {{7, 11, 8, 3}, {{{8, 11}, {3, 7}}}},
                                            {{14, 6, 15, 3}, {{{6, 15}, {3, 14}}}},
                                            {{12, 13, 15, 8}, {{{13, 15}, {8, 12}}}}}};
    return b;
}

struct BlockResult {
    TorusMorphism morph;          // FT(B_after) -> FT(B_before)
    ExchangeMatrix B_after;
    std::vector<TorusMonomial> dilog_args;  // the four (Y^(t)_k)^{eps_t}, pushed to FT(B_before)
};

/// Composite monomial map tau_{k1,e1} tau_{k2,e2} tau_{k3,e3} tau_{k4,e4} sigma sigma
/// of one block, together with the dilogarithm arguments expressed in the torus
/// at the start of the block.
inline BlockResult composite_tau(const ExchangeMatrix& B0, const TauBlock& blk,
                                 const SignTuple& signs) {
    std::vector<ExchangeMatrix> Bs{B0};
    for (int k : blk.mu) Bs.push_back(mutate_B(Bs.back(), k - 1));
    for (auto [r, s] : blk.sigma) Bs.push_back(transpose_indices(Bs.back(), r - 1, s - 1));

    std::vector<TorusMorphism> taus;
    for (size_t t = 0; t < 4; ++t)
        taus.push_back(tau_monomial(Bs[t], Bs[t + 1], blk.mu[t] - 1, signs[t]));

    std::vector<TorusMonomial> args;
    int n = B0.size();
    for (size_t t = 0; t < 4; ++t) {
        ExpVec a(size_t(n), 0);
        a[size_t(blk.mu[t] - 1)] = signs[t];
        TorusMonomial m{LaurentScalar::one(), std::move(a)};
        for (size_t j = t; j-- > 0;) m = taus[j].apply(m);
        args.push_back(std::move(m));
    }

    TorusMorphism m = taus[0];
    for (size_t t = 1; t < 4; ++t) m = m.compose(taus[t]);
    for (size_t s = 0; s < 2; ++s) {
        m = m.compose(sigma_morphism(Bs[4 + s], blk.sigma[s].first - 1, blk.sigma[s].second - 1));
    }
    return {std::move(m), Bs.back(), std::move(args)};
}

struct PathMorphism {
    TorusMorphism morph;
    ExchangeMatrix B_final;
    std::vector<TorusMonomial> z_args;  // all dilog arguments pushed to the initial torus
};

/// Composes the four blocks of one side of the tetrahedron equation, with a
/// per-block sign tuple, then the trailing transposition.
inline PathMorphism compose_te_side(const ExchangeMatrix& B0, const std::array<TauBlock, 4>& blocks,
                                    const std::array<SignTuple, 4>& signs,
                                    std::pair<int, int> final_sigma) {
    std::optional<TorusMorphism> m;
    ExchangeMatrix B = B0;
    std::vector<TorusMonomial> zs;
    for (size_t b = 0; b < 4; ++b) {
        BlockResult r = composite_tau(B, blocks[b], signs[b]);
        for (auto& u : r.dilog_args) zs.push_back(m ? m->apply(u) : u);
        m = m ? m->compose(r.morph) : r.morph;
        B = r.B_after;
    }
    TorusMorphism fs = sigma_morphism(B, final_sigma.first - 1, final_sigma.second - 1);
    ExchangeMatrix Bf = transpose_indices(B, final_sigma.first - 1, final_sigma.second - 1);
    return {m->compose(fs), std::move(Bf), std::move(zs)};
}

inline PathMorphism te_left_morphism(const ExchangeMatrix& B17, const std::array<SignTuple, 4>& s) {
    return compose_te_side(B17, te_left_blocks(), s, {7, 12});
}
inline PathMorphism te_right_morphism(const ExchangeMatrix& B17, const std::array<SignTuple, 4>& s) {
    return compose_te_side(B17, te_right_blocks(), s, {7, 14});
}

/// Homogeneous monomial tetrahedron equation: both sides composed with the
/// same sign tuple everywhere. True exactly for eps_1 = -eps_4 = -.
inline bool check_monomial_TE(const ExchangeMatrix& B17, const SignTuple& signs) {
    std::array<SignTuple, 4> s{signs, signs, signs, signs};
    try {
        PathMorphism l = te_left_morphism(B17, s);
        PathMorphism r = te_right_morphism(B17, s);
        return l.morph.same_images(r.morph) && l.B_final == r.B_final;
    } catch (const InadmissibleVertex&) {
        return false;
    }
}

/// Sign assignments of the inhomogeneous twisted tetrahedron equation: the
/// tropical signs of the two paths.
inline std::array<SignTuple, 4> inhomogeneous_signs_left() {
    return {SignTuple{1, 1, 1, 1}, SignTuple{1, 1, 1, 1}, SignTuple{1, 1, -1, 1},
            SignTuple{-1, 1, 1, 1}};
}
inline std::array<SignTuple, 4> inhomogeneous_signs_right() {
    return {SignTuple{1, 1, 1, 1}, SignTuple{1, 1, 1, 1}, SignTuple{1, -1, 1, 1},
            SignTuple{-1, 1, 1, 1}};
}

/// Runs the inhomogeneous twisted tetrahedron equation; both sides must agree,
/// and the shared morphism is returned.
inline TorusMorphism run_inhomogeneous_TE(const ExchangeMatrix& B17) {
    PathMorphism l = te_left_morphism(B17, inhomogeneous_signs_left());
    PathMorphism r = te_right_morphism(B17, inhomogeneous_signs_right());
    if (!l.morph.same_images(r.morph) || !(l.B_final == r.B_final))
        throw std::runtime_error("inhomogeneous TE: sides disagree");
    return l.morph;
}

/// Expected images of the inhomogeneous composition: ordered generator
/// products with explicit q-powers (t-exponent, list of (generator, power)).
struct OrderedMonomial {
    std::int64_t texp;
    std::vector<std::pair<int, int>> factors;  // 1-based generator, power
};

inline const std::array<OrderedMonomial, 17>& y22_table() {
    static const std::array<OrderedMonomial, 17> t{{
        {0, {{1, 1}}},
        {0, {{2, 1}}},
        {2, {{7, -1}, {12, -1}, {13, -1}, {14, -1}}},
        {0, {{4, 1}}},
        {-2, {{5, 1}, {6, 1}}},
        {2, {{13, 1}, {14, 1}}},
        {0, {{13, -1}}},
        {-2, {{12, 1}, {13, 1}}},
        {2, {{8, 1}, {9, 1}}},
        {-2, {{10, 1}, {11, 1}}},
        {0, {{3, 1}, {6, 1}, {7, 1}, {11, 1}, {12, 1}}},
        {-6, {{3, -1}, {6, -1}, {7, -1}, {8, -1}, {14, -1}, {15, -1}}},
        {-2, {{3, 1}, {6, 1}, {7, 1}, {8, 1}}},
        {-2, {{3, -1}, {6, -1}, {7, -1}, {8, -1}, {11, -1}, {12, -1}}},
        {-8, {{3, 1}, {7, 1}, {8, 1}, {14, 1}, {15, 1}}},
        {2, {{15, 1}, {16, 1}}},
        {4, {{7, 1}, {12, 1}, {13, 1}, {14, 1}, {17, 1}}},
    }};
    return t;
}

/// Normal form of an ordered generator product in the torus of B.
inline TorusMonomial ordered_monomial(const Torus& T, const OrderedMonomial& om) {
    TorusMonomial m{LaurentScalar::t_power(om.texp), ExpVec(size_t(T.rank()), 0)};
    for (auto [g, p] : om.factors) m = T.mul(m, T.gen(g - 1, p));
    return m;
}

}  // namespace sbq
