#pragma once

#include "exchange.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbq {

struct SignIncoherent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tropical y-seed: exchange matrix plus the c-vectors (column i carries the
/// c-vector of y_i). Sign coherence of every column is an invariant along any
/// mutation sequence from (B, identity).
struct TropicalSeed {
    ExchangeMatrix B;
    std::vector<std::vector<std::int64_t>> C;  // C[i] = c-vector of y_i

    static TropicalSeed initial(const ExchangeMatrix& B0) {
        TropicalSeed s;
        s.B = B0;
        int n = B0.size();
        s.C.assign(size_t(n), std::vector<std::int64_t>(size_t(n), 0));
        for (int i = 0; i < n; ++i) s.C[size_t(i)][size_t(i)] = 1;
        return s;
    }

    // tropical sign of y_k; throws when the c-vector is mixed-sign
    int sign(int k) const {
        bool pos = true, neg = true;
        for (auto v : C[size_t(k)]) {
            if (v > 0) neg = false;
            if (v < 0) pos = false;
        }
        if (!pos && !neg)
            throw SignIncoherent("tropical seed: mixed-sign c-vector at vertex " +
                                 std::to_string(k + 1));
        return pos ? +1 : -1;
    }

    bool operator==(const TropicalSeed& o) const { return B == o.B && C == o.C; }
};

/// c-vector form of the tropical mutation: c'_k = -c_k and
/// c'_i = c_i + c_k [eps_k b_ik]_+ with eps_k the tropical sign of y_k.
inline TropicalSeed tropical_mutate(const TropicalSeed& s, int k, int* sign_out = nullptr) {
    int eps = s.sign(k);
    if (sign_out) *sign_out = eps;
    int n = s.B.size();
    TropicalSeed r;
    r.B = mutate_B(s.B, k);
    r.C.assign(size_t(n), {});
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            auto v = s.C[size_t(k)];
            for (auto& x : v) x = -x;
            r.C[size_t(i)] = std::move(v);
        } else {
            int m2 = std::max(0, eps * s.B.b2(i, k));  // doubled [eps b_ik]_+, integral at admissible k
            int m = m2 / 2;
            auto v = s.C[size_t(i)];
            if (m != 0)
                for (size_t t = 0; t < v.size(); ++t) v[t] += m * s.C[size_t(k)][t];
            r.C[size_t(i)] = std::move(v);
        }
    }
    return r;
}

inline TropicalSeed tropical_transpose(const TropicalSeed& s, int r, int t) {
    TropicalSeed out;
    out.B = transpose_indices(s.B, r, t);
    out.C = s.C;
    std::swap(out.C[size_t(r)], out.C[size_t(t)]);
    return out;
}

/// Runs a whole sequence, recording the tropical sign at each mutation point.
inline TropicalSeed run_tropical(const TropicalSeed& s0, const MutationSequence& seq,
                                 std::vector<int>* signs = nullptr) {
    TropicalSeed s = s0;
    for (const auto& st : seq) {
        if (st.kind == SeqStep::Mutate) {
            int sg = 0;
            s = tropical_mutate(s, st.a - 1, &sg);
            if (signs) signs->push_back(sg);
        } else {
            s = tropical_transpose(s, st.a - 1, st.b - 1);
        }
    }
    return s;
}

struct PathEqualityReport {
    bool equal = false;
    std::vector<int> signs_left, signs_right;
};

/// Compares the final (B, C) of two mutation sequences from the same seed.
inline PathEqualityReport verify_path_equality(const MutationSequence& seq1,
                                               const MutationSequence& seq2,
                                               const ExchangeMatrix& B0) {
    PathEqualityReport rep;
    TropicalSeed s0 = TropicalSeed::initial(B0);
    TropicalSeed a = run_tropical(s0, seq1, &rep.signs_left);
    TropicalSeed b = run_tropical(s0, seq2, &rep.signs_right);
    rep.equal = (a == b);
    return rep;
}

}  // namespace sbq
