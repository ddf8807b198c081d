#include "doctest.h"

#include "cellkit/group.hpp"
#include "oracles.hpp"

using namespace cellkit;

TEST_CASE("permutation parsing") {
    CHECK(Perm::parse("[3,1,2]") == Perm({3, 1, 2}));
    CHECK(Perm::parse("s1s2", 3) == Perm::simple(3, 1) * Perm::simple(3, 2));
    CHECK(Perm::parse("s1 s2", 3) == Perm::parse("s1s2", 3));
    CHECK(Perm::parse("1", 4) == Perm::identity(4));
    CHECK_THROWS_AS(Perm({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Perm::parse("s4", 3), std::invalid_argument);
    CHECK_THROWS_AS(Perm::parse("[1,2]", 3), std::invalid_argument);
    CHECK((Perm::simple(3, 1) * Perm::simple(3, 2)).to_string() == "[2,3,1]");
}

TEST_CASE("length, words and descents") {
    for (int n = 1; n <= 5; ++n)
        for (const Perm& w : oracle::all_perms(n)) {
            CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
            CHECK(Perm::from_word(n, w.reduced_word()) == w);
            CHECK(w * w.inverse() == Perm::identity(n));
            for (int i : w.left_descents()) CHECK((Perm::simple(n, i) * w).length() == w.length() - 1);
            for (int i : w.right_descents()) CHECK((w * Perm::simple(n, i)).length() == w.length() - 1);
        }
    CHECK(Perm({4, 3, 2, 1}).word_string() == "s1s2s1s3s2s1");
    CHECK(Perm::identity(3).word_string() == "1");
}

TEST_CASE("bruhat order agrees with the dot criterion") {
    for (int n = 1; n <= 4; ++n) {
        const auto perms = oracle::all_perms(n);
        for (const Perm& y : perms)
            for (const Perm& w : perms) CHECK(bruhat_leq(y, w) == oracle::bruhat_dot(y, w));
    }
}

TEST_CASE("group tables") {
    const auto g = SymmetricGroup::get(4);
    CHECK(g->size() == 24);
    CHECK(g->element(0) == Perm::identity(4));
    CHECK(g->element(g->longest()) == Perm({4, 3, 2, 1}));
    for (int w = 0; w < g->size(); ++w) {
        CHECK(g->index_of(g->element(w)) == w);
        CHECK(g->element(g->inverse(w)) == g->element(w).inverse());
        for (int i = 1; i < 4; ++i) {
            CHECK(g->element(g->left_mul(i, w)) == Perm::simple(4, i) * g->element(w));
            CHECK(g->element(g->right_mul(w, i)) == g->element(w) * Perm::simple(4, i));
        }
        if (w + 1 < g->size()) CHECK(length_lex_less(g->element(w), g->element(w + 1)));
    }
    CHECK(g->element(g->mul(5, 7)) == g->element(5) * g->element(7));
}

TEST_CASE("partitions") {
    CHECK(Partition::parse("3,1") == Partition({3, 1}));
    CHECK(Partition::parse("(2,2,1)").conjugate() == Partition({3, 2}));
    CHECK_THROWS_AS(Partition::parse("1,3"), std::invalid_argument);
    std::vector<std::size_t> counts;
    for (int n = 1; n <= 6; ++n) counts.push_back(Partition::all(n).size());
    CHECK(counts == std::vector<std::size_t>{1, 2, 3, 5, 7, 11});
    CHECK(Partition::all(4).front() == Partition({4}));
    CHECK(Partition({2, 2}).dominated_by(Partition({3, 1})));
    CHECK_FALSE(Partition({3, 1}).dominated_by(Partition({2, 2})));
    CHECK_FALSE(Partition({3, 3}).dominated_by(Partition({4, 1, 1})));
    CHECK_FALSE(Partition({4, 1, 1}).dominated_by(Partition({3, 3})));
}

TEST_CASE("young subgroups and cosets") {
    const Partition lambda({3, 1});
    const YoungData yd = young_data(lambda);
    CHECK(yd.generators == std::vector<int>{1, 2});
    CHECK(yd.longest == Perm({3, 2, 1, 4}));
    CHECK(yd.poincare == Laurent::parse("1 + 2v^2 + 2v^4 + v^6"));
    CHECK(young_subgroup(lambda).size() == 6);
    CHECK(coset_reps(lambda).size() == 4);
    for (const Perm& w : oracle::all_perms(4)) {
        const auto cd = coset_decompose(w, lambda);
        CHECK(cd.x * cd.u == w);
        CHECK(is_coset_rep(cd.x, lambda));
        CHECK(cd.x.length() + cd.u.length() == w.length());
    }
}

TEST_CASE("standard tableaux") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : Partition::all(n)) {
            const auto tabs = std_tableaux(lambda);
            auto brute = oracle::brute_standard_tableaux(lambda);
            CHECK(static_cast<long long>(tabs.size()) == hook_length_count(lambda));
            CHECK(std::set<Tableau>(tabs.begin(), tabs.end()) == std::set<Tableau>(brute.begin(), brute.end()));
            CHECK(tabs.front() == Tableau::initial(lambda));
            for (const Tableau& t : tabs) CHECK(Tableau::initial(lambda).acted_on_by(d_of_tableau(t)) == t);
        }
    const auto tabs = std_tableaux(Partition({3, 1}));
    std::vector<std::string> words;
    for (const Tableau& t : tabs) words.push_back(d_of_tableau(t).word_string());
    CHECK(words == std::vector<std::string>{"1", "s3", "s2s3"});
}

TEST_CASE("robinson-schensted") {
    const RskResult r = rsk(Perm({4, 3, 2, 1}));
    CHECK(r.shape == Partition({1, 1, 1, 1}));
    const RskResult s = rsk(Perm({2, 4, 1, 3}));
    CHECK(s.insertion == Tableau({{1, 3}, {2, 4}}));
    CHECK(s.recording == Tableau({{1, 2}, {3, 4}}));
    for (int n = 1; n <= 5; ++n)
        for (const Perm& w : oracle::all_perms(n)) {
            const RskResult a = rsk(w);
            CHECK(a.shape == oracle::greene_shape(w));
            CHECK(rsk_inverse(a.insertion, a.recording) == w);
            const RskResult b = rsk(w.inverse());
            CHECK(b.insertion == a.recording);
            CHECK(b.recording == a.insertion);
        }
    CHECK_THROWS_AS(rsk_inverse(Tableau({{1, 2}}), Tableau({{1}, {2}})), std::invalid_argument);
}
