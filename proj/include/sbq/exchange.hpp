#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace sbq {

struct InadmissibleVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Skew-symmetric exchange matrix with entries in {0, ±1/2, ±1},
/// stored doubled so the arithmetic stays integral.
class ExchangeMatrix {
  public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(int n) : n_(n), b2_(size_t(n) * size_t(n), 0) {}

    int size() const { return n_; }
    int b2(int i, int j) const { return b2_[size_t(i) * size_t(n_) + size_t(j)]; }  // 2*b_ij
    void set_b2(int i, int j, int v) {
        b2_[size_t(i) * size_t(n_) + size_t(j)] = v;
        b2_[size_t(j) * size_t(n_) + size_t(i)] = -v;
    }

    bool operator==(const ExchangeMatrix& o) const { return n_ == o.n_ && b2_ == o.b2_; }
    bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }

    bool is_skew() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (b2(i, j) != -b2(j, i)) return false;
        return true;
    }
    bool entries_in_range() const {
        return std::all_of(b2_.begin(), b2_.end(), [](int v) { return v >= -2 && v <= 2; });
    }

    nlohmann::json to_json() const {
        nlohmann::json entries = nlohmann::json::array();
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (b2(i, j) != 0) entries.push_back({i + 1, j + 1, b2(i, j)});
        return {{"size", n_}, {"entries", entries}};
    }
    static ExchangeMatrix from_json(const nlohmann::json& j) {
        ExchangeMatrix B(j.at("size").get<int>());
        for (const auto& e : j.at("entries"))
            B.set_b2(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1, e.at(2).get<int>());
        return B;
    }

  private:
    int n_ = 0;
    std::vector<int> b2_;
};

/// Quiver mutation of the exchange matrix at vertex k (0-based).
/// k is admissible only when no half-integer arrow touches it.
inline ExchangeMatrix mutate_B(const ExchangeMatrix& B, int k) {
    int n = B.size();
    for (int i = 0; i < n; ++i)
        if (B.b2(k, i) == 1 || B.b2(k, i) == -1)
            throw InadmissibleVertex("mutate_B: vertex " + std::to_string(k + 1) +
                                     " has a half-integer arrow");
    ExchangeMatrix R(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (i == k || j == k) {
                R.set_b2(i, j, -B.b2(i, j));
            } else {
                // doubled form of b_ij + (|b_ik| b_kj + b_ik |b_kj|)/2
                int v = B.b2(i, j) + (std::abs(B.b2(i, k)) * B.b2(k, j) +
                                      B.b2(i, k) * std::abs(B.b2(k, j))) / 4;
                R.set_b2(i, j, v);
            }
        }
    return R;
}

/// Exchange of indices r and s (0-based) in rows and columns.
inline ExchangeMatrix transpose_indices(const ExchangeMatrix& B, int r, int s) {
    if (r == s) throw std::invalid_argument("transpose_indices: r == s");
    int n = B.size();
    auto m = [&](int i) { return i == r ? s : (i == s ? r : i); };
    ExchangeMatrix R(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) R.set_b2(i, j, B.b2(m(i), m(j)));
    return R;
}

/// One step of a mutation sequence: either mu_k or sigma_{r,s} (1-based labels).
struct SeqStep {
    enum Kind { Mutate, Swap } kind;
    int a = 0, b = 0;
    static SeqStep mu(int k) { return {Mutate, k, 0}; }
    static SeqStep sigma(int r, int s) { return {Swap, r, s}; }
};
using MutationSequence = std::vector<SeqStep>;

inline ExchangeMatrix apply_sequence(ExchangeMatrix B, const MutationSequence& seq) {
    for (const auto& st : seq)
        B = st.kind == SeqStep::Mutate ? mutate_B(B, st.a - 1)
                                       : transpose_indices(B, st.a - 1, st.b - 1);
    return B;
}

/// Wiring diagram for a reduced word of the longest element of W(A_{n-1}).
/// word[k] is the level (counted from the top) of the k-th crossing.
struct WiringDiagram {
    int wires = 0;
    std::vector<int> word;

    WiringDiagram(int n, std::vector<int> w) : wires(n), word(std::move(w)) {
        validate();
    }

    int crossings() const { return int(word.size()); }
    // gap = wire position pair counted from the bottom
    int gap(int k) const { return wires - word[size_t(k)]; }

    void validate() const {
        int n = wires;
        long need = long(n) * (n - 1) / 2;
        if (long(word.size()) != need)
            throw std::invalid_argument("WiringDiagram: word length != n(n-1)/2");
        // reduced word for the longest element: every swap must be an ascent
        std::vector<int> perm(static_cast<size_t>(n), 0);
        std::iota(perm.begin(), perm.end(), 1);
        for (int lv : word) {
            if (lv < 1 || lv >= n) throw std::invalid_argument("WiringDiagram: bad level");
            int g = n - lv;  // bottom-up position
            if (perm[size_t(g - 1)] > perm[size_t(g)])
                throw std::invalid_argument("WiringDiagram: word is not reduced");
            std::swap(perm[size_t(g - 1)], perm[size_t(g)]);
        }
        for (int i = 0; i < n; ++i)
            if (perm[size_t(i)] != n - i)
                throw std::invalid_argument("WiringDiagram: word does not reach the longest element");
    }
};

/// Vertex labeling of a symmetric butterfly quiver: which label (0-based)
/// sits on each crossing and on each domain of the wiring diagram.
struct SBLabeling {
    std::vector<int> crossing;             // by sweep position
    int bottom = 0, top = 0;               // outer domains
    std::vector<std::vector<int>> segment; // [gap-1][segment index]
};

/// Symmetric butterfly quiver of a wiring diagram. Vertices sit on the
/// crossings and in the domains; each crossing is a source vertically and a
/// sink horizontally, and each of its four elementary triangles contributes a
/// dotted cycle. Dotted pairs merge into solid arrows or cancel.
///
/// Labels are assigned bottom-up and left-to-right: bottom outer region first,
/// then each gap row with domains and crossings interleaved, top outer last.
/// For the word 212 this reproduces the 10-vertex labeled quiver, and for
/// 121321 the 17-vertex one used by the tetrahedron-equation suites.
inline std::pair<ExchangeMatrix, SBLabeling> build_sb_quiver(const WiringDiagram& d) {
    int n = d.wires;
    int l = d.crossings();
    std::vector<std::vector<int>> gap_cross(static_cast<size_t>(n));  // crossing positions per gap
    for (int k = 0; k < l; ++k) gap_cross[size_t(d.gap(k))].push_back(k);

    SBLabeling lab;
    lab.crossing.assign(size_t(l), -1);
    lab.segment.assign(size_t(n - 1), {});
    int next = 0;
    lab.bottom = next++;
    for (int g = 1; g < n; ++g) {
        auto& gc = gap_cross[size_t(g)];
        lab.segment[size_t(g - 1)].assign(gc.size() + 1, -1);
        for (size_t s = 0; s <= gc.size(); ++s) {
            lab.segment[size_t(g - 1)][s] = next++;
            if (s < gc.size()) lab.crossing[size_t(gc[s])] = next++;
        }
    }
    lab.top = next++;

    int N = next;
    ExchangeMatrix B(N);
    auto seg_at = [&](int g, int pos) {  // domain label of gap-g segment at sweep position pos
        if (g == 0) return lab.bottom;
        if (g == n) return lab.top;
        const auto& gc = gap_cross[size_t(g)];
        size_t s = 0;
        while (s < gc.size() && gc[s] < pos) ++s;
        return lab.segment[size_t(g - 1)][s];
    };
    auto add = [&](int i, int j, int w2) { B.set_b2(i, j, B.b2(i, j) + w2); };

    for (int k = 0; k < l; ++k) {
        int g = d.gap(k);
        int c = lab.crossing[size_t(k)];
        const auto& gc = gap_cross[size_t(g)];
        size_t idx = size_t(std::find(gc.begin(), gc.end(), k) - gc.begin());
        int W = lab.segment[size_t(g - 1)][idx];
        int E = lab.segment[size_t(g - 1)][idx + 1];
        int Nv = seg_at(g + 1, k);
        int Sv = seg_at(g - 1, k);
        add(c, Nv, 2);
        add(c, Sv, 2);
        add(W, c, 2);
        add(E, c, 2);
        add(Sv, W, 1);
        add(Sv, E, 1);
        add(Nv, W, 1);
        add(Nv, E, 1);
    }
    return {B, lab};
}

// ---- named quivers of the tetrahedron-equation construction ----

/// 10-vertex quiver of the word 212 (3 wires), canonical labeling.
inline ExchangeMatrix sb10() { return build_sb_quiver(WiringDiagram(3, {2, 1, 2})).first; }

/// The companion 10-vertex quiver reached by mu_4 mu_3 mu_5 mu_8 sigma_35 sigma_48,
/// with the labeling the mutation sequence carries along (word 121).
inline ExchangeMatrix sb10_prime() {
    ExchangeMatrix B(10);
    struct E { int i, j, v; };
    // read off the labeled 121 diagram
    static constexpr E es[] = {{10, 7, 1}, {5, 10, 2}, {10, 4, 2}, {3, 10, 2}, {10, 9, 1},
                               {7, 5, 2},  {4, 5, 2},  {4, 3, 2},  {9, 3, 2},  {2, 7, 1},
                               {8, 4, 2},  {5, 2, 2},  {3, 6, 2},  {6, 9, 1},  {2, 8, 2},
                               {6, 8, 2},  {1, 2, 1},  {8, 1, 2},  {1, 6, 1}};
    for (auto& e : es) B.set_b2(e.i - 1, e.j - 1, e.v);
    return B;
}

/// 17-vertex quiver of the word 121321 (4 wires), canonical labeling.
/// Crossings carry labels 3, 6, 8, 11, 13, 15; the mutation sequences of the
/// tetrahedron-equation suites are expressed in these labels.
inline ExchangeMatrix sb17() { return build_sb_quiver(WiringDiagram(4, {1, 2, 1, 3, 2, 1})).first; }

/// Mutation sequence of the 10-vertex cluster transformation block.
inline MutationSequence rhat_sequence() {
    return {SeqStep::mu(4), SeqStep::mu(3), SeqStep::mu(5), SeqStep::mu(8),
            SeqStep::sigma(3, 5), SeqStep::sigma(4, 8)};
}

/// Left path of the twisted tetrahedron equation on the 17-vertex quiver:
/// four cluster-transformation blocks followed by sigma_{7,12}.
inline MutationSequence te_left_sequence() {
    return {SeqStep::mu(14), SeqStep::mu(13), SeqStep::mu(15), SeqStep::mu(8),
            SeqStep::sigma(13, 15), SeqStep::sigma(8, 14),
            SeqStep::mu(7), SeqStep::mu(6), SeqStep::mu(15), SeqStep::mu(3),
            SeqStep::sigma(6, 15), SeqStep::sigma(3, 7),
            SeqStep::mu(12), SeqStep::mu(11), SeqStep::mu(8), SeqStep::mu(3),
            SeqStep::sigma(8, 11), SeqStep::sigma(3, 12),
            SeqStep::mu(14), SeqStep::mu(11), SeqStep::mu(13), SeqStep::mu(6),
            SeqStep::sigma(11, 13), SeqStep::sigma(6, 14),
            SeqStep::sigma(7, 12)};
}

/// Right path, ending with sigma_{7,14}.
inline MutationSequence te_right_sequence() {
    return {SeqStep::mu(12), SeqStep::mu(11), SeqStep::mu(13), SeqStep::mu(6),
            SeqStep::sigma(11, 13), SeqStep::sigma(6, 12),
            SeqStep::mu(7), SeqStep::mu(11), SeqStep::mu(8), SeqStep::mu(3),
            SeqStep::sigma(8, 11), SeqStep::sigma(3, 7),
            SeqStep::mu(14), SeqStep::mu(6), SeqStep::mu(15), SeqStep::mu(3),
            SeqStep::sigma(6, 15), SeqStep::sigma(3, 14),
            SeqStep::mu(12), SeqStep::mu(13), SeqStep::mu(15), SeqStep::mu(8),
            SeqStep::sigma(13, 15), SeqStep::sigma(8, 12),
            SeqStep::sigma(7, 14)};
}

}  // namespace sbq
