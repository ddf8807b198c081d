#include "doctest.h"

#include "cellkit/murphy.hpp"
#include "cellkit/report.hpp"

using namespace cellkit;

namespace {

struct S4 {
    KLTablePtr table = KLTable::build(4);
    CellPartition left{Preorder(*table, Side::left)};
    CellPartition right{Preorder(*table, Side::right)};
    const SymmetricGroup& g = *table->group();
    int idx(const std::string& w) const { return g.index_of(Perm::parse(w, 4)); }
};

}  // namespace

TEST_CASE("shapes") {
    CHECK(shape_of(Perm::identity(4)) == Partition({1, 1, 1, 1}));
    CHECK(shape_of(Perm({4, 3, 2, 1})) == Partition({4}));
    for (const Partition& lambda : Partition::all(5)) CHECK(shape_of(young_data(lambda).longest) == lambda);
}

TEST_CASE("x_lambda and murphy elements") {
    const auto table = KLTable::build(3);
    const GroupPtr& g = table->group();
    const HeckeElt x = x_lambda(Partition({2, 1}), g);
    CHECK(x.to_string() == "T[1,2,3] + v*T[2,1,3]");
    const Partition lambda({2, 1});
    const auto tabs = std_tableaux(lambda);
    const TableauPair pair{tabs[0], tabs[0]};
    CHECK(murphy_element(pair, MurphyVariant::x, *table) == x);
    const HeckeElt y = murphy_element(pair, MurphyVariant::y, *table);
    CHECK(y == kl_element(g->index_of(Perm({2, 1, 3})), Basis::C, *table));
}

TEST_CASE("index map for (3,1)") {
    S4 s;
    const IndexMap imap = index_map(Partition({3, 1}), *s.table, s.left, s.right);
    REQUIRE(imap.dim() == 3);
    CHECK(imap.longest == s.idx("s1s2s1"));
    CHECK(imap.grid[0][0] == s.idx("s1s2s1"));
    CHECK(imap.grid[0][1] == s.idx("s1s2s1s3"));
    CHECK(imap.grid[1][1] == s.idx("s1s2s3s2s1"));
    CHECK(imap.grid[2][2] == s.idx("s2s3s2"));
    CHECK(*imap.locate(s.idx("s2s3s2s1")) == std::pair{2, 1});
    CHECK_FALSE(imap.locate(0));
    CHECK(imap.tableau_index(Tableau({{1, 2, 4}, {3}})) == 1);
    CHECK_THROWS(imap.tableau_index(Tableau({{1, 2, 3, 4}})));
}

TEST_CASE("base change for (3,1)") {
    S4 s;
    const IndexMap imap = index_map(Partition({3, 1}), *s.table, s.left, s.right);
    const auto& t = imap.tableaux;
    const BaseChange bc = base_change({t[2], t[2]}, imap, *s.table);
    CHECK(bc.leading == s.idx("s2s3s2"));
    CHECK(hecke_words(bc.expansion) ==
          "C(s2s3s2) + v*C(s1s2s3s2) + v*C(s2s3s2s1) + v^2*C(s1s2s3s2s1) + (-v^-1 + v)*C(s1s2s1s3s2s1)");
    CHECK(bc.same_shape.size() == 3);
    REQUIRE(bc.higher.size() == 1);
    CHECK(bc.higher[0].second == Laurent::parse("v - v^-1"));
}

TEST_CASE("Z_w") {
    S4 s;
    const Partition lambda({3, 1});
    const IndexMap imap = index_map(lambda, *s.table, s.left, s.right);
    for (const auto& row : imap.grid)
        for (int w : row) {
            const HeckeElt z = z_element(w, imap, *s.table);
            CHECK(z.coeff(w) == Laurent(1));
            const HeckeElt zt = convert_basis(z, Basis::T, *s.table);
            CHECK(apply_involution(zt, Involution::bar) == zt);
        }
}

TEST_CASE("ideals") {
    S4 s;
    for (const Partition& lambda : Partition::all(4)) {
        const IdealBasis basis = ideal_basis(lambda, *s.table);
        CHECK(basis.murphy.size() == basis.kl.size());
        CHECK_FALSE(check_equal_span(lambda, *s.table));
    }
    const HeckeElt one = HeckeElt::basis_element(s.table->group(), Basis::T, 0);
    CHECK(ideal_violation(one, Partition({2, 2}), *s.table));
    CHECK_FALSE(ideal_violation(one, Partition({1, 1, 1, 1}), *s.table));
}

TEST_CASE("bareiss") {
    const Laurent v = Laurent::v(1);
    LaurentMatrix m = {{v, 1}, {Laurent(0), Laurent::v(-3)}};
    CHECK(bareiss_determinant(m) == Laurent::v(-2));
    LaurentMatrix sing = {{v, 1}, {v * v, v}};
    CHECK(bareiss_determinant(sing).is_zero());
    LaurentMatrix pivot = {{Laurent(0), 1, Laurent(0)}, {1, Laurent(0), Laurent(0)}, {Laurent(0), Laurent(0), v + 1}};
    CHECK(bareiss_determinant(pivot) == -(v + 1));
    CHECK(is_unit(-Laurent::v(4)));
    CHECK_FALSE(is_unit(2 * v));
    CHECK_FALSE(is_unit(v + 1));
}
