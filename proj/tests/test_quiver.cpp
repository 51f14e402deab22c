#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sbq/tropical.hpp"

#include <random>

using namespace sbq;

namespace {
// figure data: 1-based (i, j, 2*b_ij)
struct E {
    int i, j, v;
};
constexpr E fig32a[] = {{1, 2, 1},  {3, 1, 2}, {1, 4, 2}, {5, 1, 2}, {1, 6, 1},
                        {6, 5, 2},  {4, 5, 2}, {4, 3, 2}, {2, 3, 2}, {7, 2, 1},
                        {3, 7, 2},  {8, 4, 2}, {5, 9, 2}, {9, 6, 1}, {9, 8, 2},
                        {7, 8, 2},  {10, 7, 1}, {8, 10, 2}, {10, 9, 1}};

ExchangeMatrix from_entries(int n, const E* es, size_t cnt) {
    ExchangeMatrix B(n);
    for (size_t k = 0; k < cnt; ++k) B.set_b2(es[k].i - 1, es[k].j - 1, es[k].v);
    return B;
}
}  // namespace

TEST_CASE("build_sb_quiver reproduces the labeled 10-vertex quiver for word 212") {
    ExchangeMatrix B = sb10();
    ExchangeMatrix want = from_entries(10, fig32a, std::size(fig32a));
    CHECK(B == want);
    CHECK(B.is_skew());
    CHECK(B.entries_in_range());
}

TEST_CASE("word 121 gives the companion quiver under its own labeling") {
    // canonical labeling of 121 relabels; the figure's labeling is recovered by
    // the mutation chain, checked below. Here: vertex count and degree profile.
    ExchangeMatrix B = build_sb_quiver(WiringDiagram(3, {1, 2, 1})).first;
    CHECK(B.size() == 10);
    CHECK(B.is_skew());
}

TEST_CASE("mutation chain from (a) to (b)") {
    ExchangeMatrix B = sb10();
    ExchangeMatrix Bp = apply_sequence(B, rhat_sequence());
    CHECK(Bp == sb10_prime());
}

TEST_CASE("mutations are involutive") {
    ExchangeMatrix B = sb10();
    CHECK(mutate_B(mutate_B(B, 3), 3) == B);
}

TEST_CASE("single-entry mutation formula on a random 4x4") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-1, 1);
    for (int it = 0; it < 40; ++it) {
        ExchangeMatrix B(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) B.set_b2(i, j, 2 * d(rng));
        int k = int(rng() % 4);
        ExchangeMatrix Bp = mutate_B(B, k);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (i == k || j == k) {
                    CHECK(Bp.b2(i, j) == -B.b2(i, j));
                } else {
                    int v = B.b2(i, j) +
                            (std::abs(B.b2(i, k)) * B.b2(k, j) + B.b2(i, k) * std::abs(B.b2(k, j))) / 4;
                    CHECK(Bp.b2(i, j) == v);
                }
            }
    }
}

TEST_CASE("inadmissible vertex raises") {
    ExchangeMatrix B = sb10();
    CHECK_THROWS_AS(mutate_B(B, 0), InadmissibleVertex);  // vertex 1 has dotted arrows
}

TEST_CASE("transpose_indices involution and skew preservation") {
    ExchangeMatrix B = sb10();
    CHECK(transpose_indices(transpose_indices(B, 2, 4), 2, 4) == B);
    CHECK(transpose_indices(B, 2, 4).is_skew());
    CHECK_THROWS_AS(transpose_indices(B, 1, 1), std::invalid_argument);
}

TEST_CASE("wiring diagram validation") {
    CHECK_THROWS_AS(WiringDiagram(3, {2, 2, 1}), std::invalid_argument);  // not reduced
    CHECK_THROWS_AS(WiringDiagram(3, {2, 1}), std::invalid_argument);     // too short
    CHECK_NOTHROW(WiringDiagram(4, {1, 2, 1, 3, 2, 1}));
}

TEST_CASE("17-vertex quiver: 6 crossings + 11 domains, frozen entries") {
    auto [B, lab] = build_sb_quiver(WiringDiagram(4, {1, 2, 1, 3, 2, 1}));
    CHECK(B.size() == 17);
    // crossing labels in sweep order (1-based): 11, 6, 13, 3, 8, 15
    std::vector<int> want_cross{11, 6, 13, 3, 8, 15};
    for (size_t k = 0; k < 6; ++k) CHECK(lab.crossing[k] + 1 == want_cross[k]);
    CHECK(lab.bottom + 1 == 1);
    CHECK(lab.top + 1 == 17);

    // frozen matrix computed from the construction rule and validated against
    // the mutation and dilogarithm identities downstream
    constexpr E frozen[] = {{1, 2, 1},  {1, 3, -2},  {1, 4, 1},   {2, 3, 2},   {2, 5, 1},
                            {2, 6, -2}, {3, 4, -2},  {3, 7, 2},   {4, 8, -2},  {4, 9, 1},
                            {5, 6, 2},  {5, 10, 1},  {5, 11, -2}, {6, 7, -2},  {6, 12, 2},
                            {7, 8, 2},  {7, 13, -2}, {8, 9, -2},  {8, 14, 2},  {9, 15, -2},
                            {9, 16, 1}, {10, 11, 2}, {10, 17, -1}, {11, 12, -2}, {11, 17, 2},
                            {12, 13, 2}, {12, 17, -2}, {13, 14, -2}, {13, 17, 2}, {14, 15, 2},
                            {14, 17, -2}, {15, 16, -2}, {15, 17, 2}, {16, 17, -1}};
    ExchangeMatrix want = from_entries(17, frozen, std::size(frozen));
    CHECK(B == want);
    CHECK(sb17() == want);
}

TEST_CASE("vertex count = crossings + regions") {
    for (auto& w : {std::vector<int>{2, 1, 2}, std::vector<int>{1, 2, 1}}) {
        auto [B, lab] = build_sb_quiver(WiringDiagram(3, w));
        CHECK(B.size() == 3 + 7);
    }
    auto [B4, lab4] = build_sb_quiver(WiringDiagram(4, {2, 1, 3, 2, 1, 3}));
    CHECK(B4.size() == 6 + 11);
}

TEST_CASE("entry set preserved along the paper sequences") {
    ExchangeMatrix B = sb17();
    TropicalSeed s = TropicalSeed::initial(B);
    for (const auto& st : te_left_sequence()) {
        s = st.kind == SeqStep::Mutate ? tropical_mutate(s, st.a - 1)
                                       : tropical_transpose(s, st.a - 1, st.b - 1);
        CHECK(s.B.is_skew());
        CHECK(s.B.entries_in_range());
    }
}

TEST_CASE("tropical mutation basics") {
    ExchangeMatrix B = sb17();
    TropicalSeed s0 = TropicalSeed::initial(B);

    // initial signs are +, mu_4 form: c'_4 = -e_4, c'_i = e_i + [b_i4]_+ e_4
    int sg = 0;
    TropicalSeed s1 = tropical_mutate(s0, 13, &sg);  // vertex 14 (0-based 13)
    CHECK(sg == 1);
    CHECK(s1.C[13][13] == -1);
    for (int i = 0; i < 17; ++i) {
        if (i == 13) continue;
        int m = std::max(0, B.b2(i, 13)) / 2;
        for (int t = 0; t < 17; ++t)
            CHECK(s1.C[size_t(i)][size_t(t)] == (t == i ? 1 : 0) + (t == 13 ? m : 0));
    }

    // involution
    TropicalSeed s2 = tropical_mutate(s1, 13);
    CHECK(s2 == s0);
}

TEST_CASE("tropical path equality of the two 21-step sequences") {
    ExchangeMatrix B = sb17();
    auto rep = verify_path_equality(te_left_sequence(), te_right_sequence(), B);
    CHECK(rep.equal);

    // negative tropical signs exactly at the four highlighted mutations
    std::vector<int> wantL{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1, -1, 1, 1, 1};
    std::vector<int> wantR{1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1, 1, -1, 1, 1, 1};
    CHECK(rep.signs_left == wantL);
    CHECK(rep.signs_right == wantR);
}

TEST_CASE("a path equals itself; a corrupted path differs") {
    ExchangeMatrix B = sb17();
    auto self = verify_path_equality(te_left_sequence(), te_left_sequence(), B);
    CHECK(self.equal);

    MutationSequence broken = te_left_sequence();
    broken.pop_back();  // drop the final sigma_{7,12}
    auto rep = verify_path_equality(broken, te_right_sequence(), B);
    CHECK(!rep.equal);
}

TEST_CASE("sign coherence along every paper sequence") {
    ExchangeMatrix B = sb17();
    // run_tropical throws SignIncoherent on violation; also check per-step here
    TropicalSeed s = TropicalSeed::initial(B);
    for (const auto& st : te_right_sequence()) {
        if (st.kind == SeqStep::Mutate) {
            CHECK_NOTHROW(s.sign(st.a - 1));
            s = tropical_mutate(s, st.a - 1);
        } else {
            s = tropical_transpose(s, st.a - 1, st.b - 1);
        }
    }
}

TEST_CASE("exchange matrix JSON round trip") {
    ExchangeMatrix B = sb17();
    CHECK(ExchangeMatrix::from_json(B.to_json()) == B);
}
