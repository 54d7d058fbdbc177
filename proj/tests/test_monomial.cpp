#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fideal/error.hpp"
#include "fideal/monomial.hpp"
#include "oracle.hpp"

using namespace fideal;

namespace {

MonomialSet set(int n, std::string_view text) { return parse_monomial_set(text, n); }

}  // namespace

TEST_CASE("degree slices") {
    auto s = degree_slice(4, 2);
    CHECK(s.size() == 6);
    CHECK(s == set(4, "1.2,1.3,1.4,2.3,2.4,3.4"));

    auto unit = degree_slice(3, 0);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].is_unit());

    CHECK(degree_slice(5, 5) == set(5, "1.2.3.4.5"));
    CHECK(degree_slice(64, 1).size() == 64);
    CHECK(degree_slice(64, 64).size() == 1);

    CHECK_THROWS_AS((void)degree_slice(4, 5), InputError);
    CHECK_THROWS_AS((void)degree_slice(4, -1), InputError);
    CHECK_THROWS_AS((void)degree_slice(64, 32), BudgetExceeded);
}

TEST_CASE("degree slices come out in ascending support order") {
    for (int n = 1; n <= 9; ++n) {
        for (int d = 0; d <= n; ++d) {
            auto sl = degree_slice(n, d).supports();
            CHECK(sl == oracle::slice(n, d));
        }
    }
}

TEST_CASE("upper shadow") {
    CHECK(upper_shadow(set(4, "1.2,1.3,1.4")) == set(4, "1.2.3,1.2.4,1.3.4"));
    CHECK_FALSE(upper_shadow(set(4, "1.2,1.3,1.4")).contains(Monomial(4, {2, 3, 4})));
    CHECK(upper_shadow(set(4, "1.2,3.4")) == degree_slice(4, 3));
    CHECK(upper_shadow(MonomialSet(4)).empty());
}

TEST_CASE("lower shadow leaves out the unit") {
    auto b = lower_shadow(set(4, "1.2,1.3,2.3"));
    CHECK(b == set(4, "1,2,3"));
    CHECK_FALSE(b.contains(Monomial(4, {4})));
    CHECK(lower_shadow(set(4, "1")).empty());
    CHECK(lower_shadow(set(3, "1.2.3")) == set(3, "1.2,1.3,2.3"));
}

TEST_CASE("iterated shadows and closures") {
    CHECK(iterated_shadow(set(4, "1.2"), Direction::up, 2) == set(4, "1.2.3.4"));
    CHECK(iterated_shadow(set(3, "1.2.3"), Direction::down, 2) == set(3, "1,2,3"));
    CHECK(iterated_shadow(set(4, "1"), Direction::down, 1).empty());
    CHECK_THROWS_AS((void)iterated_shadow(set(4, "1"), Direction::down, 0), InputError);

    CHECK(shadow_closure(set(3, "1.2.3"), Direction::down) == set(3, "1.2,1.3,2.3,1,2,3"));
    CHECK(shadow_closure(set(3, "1"), Direction::up) == set(3, "1.2,1.3,1.2.3"));
    CHECK(shadow_closure(MonomialSet(3), Direction::down).empty());
}

TEST_CASE("text form") {
    CHECK(to_string(Monomial(5, {1, 2, 5})) == "1.2.5");
    CHECK(to_string(Monomial::unit(3)) == "@");
    CHECK(parse_monomial(" @ ", 3).is_unit());
    CHECK(parse_monomial_set(" 1.2 , 2 . 3,3.4 ", 4) == set(4, "1.2,2.3,3.4"));
    CHECK(to_string(set(4, "3.4, 1.2")) == "1.2,3.4");
    CHECK(parse_monomial_set("  ", 4).empty());

    CHECK_THROWS_AS((void)parse_monomial("1.1", 3), InputError);
    CHECK_THROWS_AS((void)parse_monomial("0.1", 3), InputError);
    CHECK_THROWS_AS((void)parse_monomial("4", 3), InputError);
    CHECK_THROWS_AS((void)parse_monomial("1.x", 3), InputError);
    CHECK_THROWS_AS((void)parse_monomial_set("1.2,,3", 3), InputError);
    CHECK_THROWS_AS((void)parse_monomial_set("1.2,2.1", 3), InputError);

    try {
        (void)parse_monomial_set("1.2, 2.9", 4);
        FAIL("expected a parse error");
    } catch (const InputError& e) {
        REQUIRE(e.position().has_value());
        CHECK(*e.position() == 7);
    }
}

TEST_CASE("monomial text round trip (property)") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 64);
        Mask m = rng() & full_mask(n);
        Monomial mono(n, m);
        CHECK(parse_monomial(to_string(mono), n) == mono);
    }
}

TEST_CASE("ideals reject bad generating sets") {
    CHECK_THROWS_AS(Ideal(MonomialSet(3)), InputError);
    CHECK_THROWS_AS((void)Ideal::parse("@", 3), InputError);
    try {
        (void)Ideal::parse("1.2,1.2.3", 4);
        FAIL("expected a non-antichain error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("1.2 divides 1.2.3") != std::string::npos);
    }
    Ideal i = Ideal::parse("1.2,2.3.4,1.3", 4);
    CHECK(i.degree() == 3);
    CHECK(i.lower_degree() == 2);
    CHECK_FALSE(i.is_homogeneous());
    CHECK(i.generators_of_degree(2) == set(4, "1.2,1.3"));
}

TEST_CASE("shadow properties on random sets") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Mask> raw;
        for (int i = 0; i < 6; ++i) raw.push_back(rng() & full_mask(n));
        MonomialSet a(n, std::span<const Mask>(raw));
        std::vector<Mask> sub_raw(raw.begin(), raw.begin() + 3);
        MonomialSet sub(n, std::span<const Mask>(sub_raw));

        // Degree shift.
        for (const auto& h : upper_shadow(a)) {
            bool extends = std::any_of(a.begin(), a.end(), [&](const Monomial& g) {
                return g.divides(h) && h.degree() == g.degree() + 1;
            });
            CHECK(extends);
        }
        for (const auto& h : lower_shadow(a)) {
            bool under = std::any_of(a.begin(), a.end(), [&](const Monomial& g) {
                return h.divides(g) && h.degree() + 1 == g.degree();
            });
            CHECK(under);
            CHECK_FALSE(h.is_unit());
        }

        // Monotonicity.
        CHECK(upper_shadow(sub).is_subset_of(upper_shadow(a)));
        CHECK(lower_shadow(sub).is_subset_of(lower_shadow(a)));

        // Up then down covers a homogeneous set again.
        const int d = 1 + static_cast<int>(rng() % (n - 1));
        auto hom = a.of_degree(d);
        CHECK(hom.is_subset_of(lower_shadow(upper_shadow(hom))));

        // Closure is reached within n steps.
        for (Direction dir : {Direction::up, Direction::down}) {
            MonomialSet acc(n);
            MonomialSet cur = a;
            for (int k = 1; k <= n; ++k) {
                cur = shadow(cur, dir);
                acc = set_union(acc, cur);
            }
            CHECK(shadow(cur, dir).is_subset_of(acc));
            CHECK(acc == shadow_closure(a, dir));
        }
    }
}
