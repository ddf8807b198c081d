#include "doctest.h"

#include "cellkit/laurent.hpp"

using namespace cellkit;

namespace {
const Laurent v = Laurent::v(1);
const Laurent vi = Laurent::v(-1);
}  // namespace

TEST_CASE("integer spills to gmp and back") {
    Integer a = Integer::from_string("9223372036854775807");
    CHECK(a.is_small());
    a += 1;
    CHECK_FALSE(a.is_small());
    CHECK(a.to_string() == "9223372036854775808");
    a -= 1;
    CHECK(a.is_small());
    Integer big = Integer::from_string("123456789012345678901234567890");
    CHECK((big * big).to_string() == "15241578753238836750495351562536198787501905199875019052100");
    CHECK((big * big).div_exact(big) == big);
    CHECK(Integer(-7) < Integer(3));
    CHECK_THROWS_AS(Integer::from_string("12a"), std::invalid_argument);
}

TEST_CASE("laurent arithmetic") {
    const Laurent q = v - vi;
    CHECK(q.to_string() == "-v^-1 + v");
    CHECK((q * q).to_string() == "v^-2 - 2 + v^2");
    CHECK(((v + vi) * (v - vi)) == Laurent::v(2) - Laurent::v(-2));
    CHECK((q - q).is_zero());
    CHECK(Laurent().to_string() == "0");
    CHECK(q.min_exp() == -1);
    CHECK(q.max_exp() == 1);
    CHECK(q.coeff(-1) == Integer(-1));
    CHECK(q.bar() == -q);
    CHECK(q.shifted(2).to_string() == "-v + v^3");
    CHECK((3 * v + 2 - vi).at_one() == Integer(4));
    CHECK(vi.in_negative_part());
    CHECK_FALSE(Laurent(1).in_negative_part());
    CHECK_THROWS_AS(Laurent().min_exp(), std::domain_error);

    Laurent acc = v;
    acc.add_product(v, vi);
    acc.add_scaled(-2, Laurent::v(3));
    CHECK(acc.to_string() == "1 + v - 2v^3");
}

TEST_CASE("laurent text round trip") {
    for (const char* text : {"0", "1", "-v^-3 + v^-1", "2v - 5v^4", "-1", "v^-1 - v"}) {
        const Laurent p = Laurent::parse(text);
        CHECK(Laurent::parse(p.to_string()) == p);
    }
    CHECK(Laurent::parse("3*v^2 + 3*v^2") == Laurent::monomial(6, 2));
    CHECK(Laurent::parse("v - v^-1") == v - vi);
    CHECK_THROWS_AS(Laurent::parse("v^x"), std::invalid_argument);
    CHECK_THROWS_AS(Laurent::parse(""), std::invalid_argument);
}

TEST_CASE("exact division") {
    const Laurent p3 = Laurent(1) + Laurent::v(2) + Laurent::v(4);
    const Laurent a = p3 * (v - 7 * Laurent::v(-5));
    CHECK(div_exact(a, p3) == v - 7 * Laurent::v(-5));
    CHECK_FALSE(try_div_exact(a + 1, p3));
    CHECK_THROWS_AS(div_exact(v, 2 * v), DivisionFailure);
    CHECK(div_exact(4 * v, 2 * vi) == 2 * Laurent::v(2));
}

TEST_CASE("laurent json") {
    const Laurent p = Laurent::parse("-v^-2 + 3");
    nlohmann::json j = p;
    CHECK(j.dump() == R"([[-2,"-1"],[0,"3"]])");
    CHECK(j.get<Laurent>() == p);
}

TEST_CASE("bilaurent") {
    BiLaurent a;
    a.add_outer(v, v + vi);
    BiLaurent b = BiLaurent::in_w(v) * BiLaurent::in_v(v + vi);
    CHECK(a == b);
    CHECK(BiLaurent::from_terms({{1, 0, 2}, {1, 0, -2}}).is_zero());
    CHECK_FALSE(BiLaurent::in_v(v) == BiLaurent::in_w(v));
}
