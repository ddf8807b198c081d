#include "doctest.h"

#include "cellkit/cells.hpp"
#include "oracles.hpp"

using namespace cellkit;

TEST_CASE("cells of S_3") {
    const auto table = KLTable::build(3);
    const auto& g = *table->group();
    const CellPartition left{Preorder(*table, Side::left)};
    REQUIRE(left.count() == 4);
    std::vector<std::vector<std::string>> cells;
    for (const auto& cell : left.cells()) {
        cells.emplace_back();
        for (int w : cell) cells.back().push_back(g.element(w).to_string());
    }
    CHECK(cells == std::vector<std::vector<std::string>>{{"[1,2,3]"}, {"[1,3,2]", "[2,3,1]"}, {"[2,1,3]", "[3,1,2]"}, {"[3,2,1]"}});
    const CellPartition two{Preorder(*table, Side::two)};
    CHECK(two.count() == 3);
    // The identity is the top of every preorder, w0 the bottom.
    CHECK(left.leq(left.cell_of(g.longest()), left.cell_of(0)));
    CHECK_FALSE(left.leq(left.cell_of(0), left.cell_of(g.longest())));
}

TEST_CASE("right cells are inverses of left cells") {
    const auto table = KLTable::build(4);
    const auto& g = *table->group();
    const Preorder left(*table, Side::left), right(*table, Side::right);
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y) CHECK(left.leq(x, y) == right.leq(g.inverse(x), g.inverse(y)));
}

TEST_CASE("star operations stay in a left cell") {
    const auto table = KLTable::build(4);
    const auto& g = *table->group();
    const CellPartition left{Preorder(*table, Side::left)};
    int moved = 0;
    for (int w = 0; w < g.size(); ++w)
        for (int i = 1; i + 1 < 4; ++i)
            if (auto u = star_operation(g, w, i)) {
                ++moved;
                CHECK(*star_operation(g, *u, i) == w);
                // Right star operations preserve the left cell of the inverse.
                CHECK(left.cell_of(g.inverse(w)) == left.cell_of(g.inverse(*u)));
            }
    CHECK(moved > 0);
}

TEST_CASE("cell modules") {
    const auto table = KLTable::build(4);
    const Preorder order(*table, Side::left);
    const CellPartition left{order};
    for (const auto& cell : left.cells()) {
        const CellModule m = cell_module(cell, *table, order);
        CHECK(m.dim() == static_cast<int>(cell.size()));
        CHECK_FALSE(check_module_relations(m));
        CHECK(m.trace_at_one(0) == m.dim());
    }
    // The whole group is convex: the left regular representation.
    std::vector<int> all(24);
    std::iota(all.begin(), all.end(), 0);
    const CellModule regular = cell_module(all, *table, order);
    CHECK_FALSE(check_module_relations(regular));
    CHECK(regular.trace(0) == Laurent(24));
    CHECK(regular.trace_at_one(5) == 0);
    CHECK_FALSE(regular.trace(5).is_zero());

    // {1, w0} skips everything in between.
    try {
        cell_module({0, 23}, *table, order);
        FAIL("expected NotACellUnion");
    } catch (const NotACellUnion& e) {
        REQUIRE(e.witness.size() == 3);
        CHECK(order.leq(e.witness[0], e.witness[1]));
        CHECK(order.leq(e.witness[1], e.witness[2]));
    }
}

TEST_CASE("character table") {
    const auto table = KLTable::build(4);
    const Preorder order(*table, Side::left);
    const CharacterTable chars(*table, order);
    const auto& g = *table->group();
    CHECK(chars.partitions().size() == 5);
    for (const Partition& lambda : chars.partitions()) {
        CHECK(chars.module(lambda).dim() == hook_length_count(lambda));
        for (int w = 0; w < g.size(); ++w) CHECK(chars.value(lambda, w).at_one() == Integer(static_cast<int64_t>(chars.value_at_one(lambda, w))));
    }
    const CellPartition left{order};
    for (const auto& cell : left.cells()) {
        const auto m = chars.decompose(cell_module(cell, *table, order));
        REQUIRE(m.size() == 1);
        CHECK(m.begin()->second == 1);
    }
}

TEST_CASE("murnaghan-nakayama") {
    CHECK(cycle_type(Perm({2, 3, 1, 5, 4})) == Partition({3, 2}));
    CHECK(cycle_type(Perm::identity(3)) == Partition({1, 1, 1}));
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : Partition::all(n)) {
            CHECK(murnaghan_nakayama(lambda, Partition(std::vector<int>(static_cast<size_t>(n), 1))) == hook_length_count(lambda));
            for (const Partition& rho : Partition::all(n)) CHECK(murnaghan_nakayama(lambda, rho) == oracle::mn_rim_hooks(lambda, rho));
        }
    CHECK(murnaghan_nakayama(Partition({4}), Partition({2, 2})) == 1);
    CHECK(murnaghan_nakayama(Partition({1, 1, 1, 1}), Partition({4})) == -1);
}
