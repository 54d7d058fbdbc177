#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <map>
#include <random>

#include "fideal/binomial.hpp"
#include "fideal/engine.hpp"
#include "fideal/error.hpp"
#include "fideal/graph.hpp"
#include "fideal/perfect.hpp"
#include "oracle.hpp"

using namespace fideal;

namespace {

MonomialSet set(int n, std::string_view text) { return parse_monomial_set(text, n); }

const char* five_cycle = "1.2,2.3,3.4,4.5,1.5";
const char* mixed_example = "1.2.3,1.2.4,1.2.5,3.4.5,2.3.4";

std::vector<std::vector<Mask>> as_masks(const std::vector<Ideal>& ideals) {
    std::vector<std::vector<Mask>> out;
    for (const auto& i : ideals) out.push_back(i.generators().supports());
    return out;
}

}  // namespace

TEST_CASE("f-ideal verdicts on the worked examples") {
    auto c5 = is_f_ideal(Ideal::parse(five_cycle, 5));
    CHECK(c5.is_f_ideal);
    CHECK(c5.route == VerdictRoute::homogeneous);
    CHECK(c5.f_facet == FVector{5, 5});
    CHECK(c5.f_nonface == FVector{5, 5});

    auto ex = is_f_ideal(Ideal::parse(mixed_example, 5));
    CHECK(ex.is_f_ideal);
    CHECK(ex.f_facet == FVector{5, 10, 5});

    auto w = is_f_ideal(Ideal::parse("1.2,3.4", 4));
    CHECK_FALSE(w.is_f_ideal);
    CHECK(w.failure_detail.has_value());

    // Degree 1 at n = 2.
    CHECK(is_f_ideal(Ideal::parse("1", 2)).is_f_ideal);
    CHECK(is_f_ideal(Ideal::parse("1.2,3", 3)).route == VerdictRoute::general_degreewise);
}

TEST_CASE("routes agree with the f-vector oracle") {
    // Every half-size candidate in (4,2) and (5,3); the library throws on disagreement.
    for (auto [n, d] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{5, 2}}) {
        const auto sl = oracle::slice(n, d);
        for (Mask pick = 1; pick < (Mask{1} << sl.size()); ++pick) {
            const auto gens = oracle::select(sl, pick);
            auto v = is_f_ideal(Ideal(MonomialSet(n, std::span<const Mask>(gens))));
            CHECK(v.is_f_ideal == oracle::is_f_ideal(n, gens));
        }
    }
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        auto gens = oracle::random_antichain(rng, n, 8);
        Ideal ideal(MonomialSet(n, std::span<const Mask>(gens)));
        auto v = is_f_ideal(ideal);
        CHECK(v.is_f_ideal == oracle::is_f_ideal(n, gens));
        bool balance = true;
        for (int l = 1; l <= n; ++l) balance = balance && degree_balance(ideal, l).holds();
        CHECK(balance == v.is_f_ideal);
    }
}

TEST_CASE("degree balance on the 5-cycle") {
    Ideal c5 = Ideal::parse(five_cycle, 5);
    auto b1 = degree_balance(c5, 1);
    CHECK(b1.generators == 0);
    CHECK(b1.below_larger == 5);
    CHECK(b1.twice_rhs() == 0);
    auto b2 = degree_balance(c5, 2);
    CHECK(b2.generators == 5);
    CHECK(b2.twice_rhs() == 10);
    auto b3 = degree_balance(c5, 3);
    CHECK(b3.above_smaller == 10);
    CHECK(b3.twice_rhs() == 0);
    for (int l = 1; l <= 5; ++l) CHECK(degree_balance(c5, l).holds());
    CHECK_THROWS_AS((void)degree_balance(c5, 0), InputError);
    CHECK_THROWS_AS((void)degree_balance(c5, 6), InputError);
}

TEST_CASE("closure identities on random ideals") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        Ideal ideal(MonomialSet(n, std::span<const Mask>(oracle::random_antichain(rng, n, 6))));
        CHECK(shadow_closure_identities(ideal));
    }
}

TEST_CASE("enumeration matches the oracle") {
    for (auto [n, d] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}, std::pair{4, 1}, std::pair{2, 1},
                        std::pair{6, 2}, std::pair{3, 2}}) {
        auto expected = oracle::f_ideals(n, d);
        std::sort(expected.begin(), expected.end());
        CHECK(as_masks(list_f_ideals(n, d)) == expected);
    }
    CHECK(list_f_ideals(4, 2).size() == 12);
    CHECK(list_f_ideals(5, 2).size() == 72);
    CHECK(list_f_ideals(5, 3).size() == 72);
    CHECK(list_f_ideals(6, 3).size() == 48494);
    CHECK(list_f_ideals(7, 2).empty());

    auto serial = as_masks(list_f_ideals(6, 3));
    CHECK(as_masks(list_f_ideals(6, 3, SearchOptions{std::uint64_t{1} << 32, 3})) == serial);
    CHECK(std::is_sorted(serial.begin(), serial.end()));

    CHECK_THROWS_AS((void)list_f_ideals(8, 2, SearchOptions{1000, 1}), BudgetExceeded);
}

TEST_CASE("closed counts") {
    CHECK(count_U(4).value == 12);
    CHECK(count_U(5).value == 60);
    CHECK(count_U(8).value == 4200);
    CHECK(count_U(6).value == 0);
    CHECK(count_V(5).value == 72);
    CHECK(count_V(8).value == 5040);
    CHECK(count_V(9).value == 24024);
    CHECK(count_V(7).value == 0);

    auto t8 = count_V_terms(8);
    REQUIRE(t8.size() == 2);
    CHECK(t8[0].l == 4);
    CHECK(t8[0].value == 4200);
    CHECK(t8[1].l == 3);
    CHECK(t8[1].value == 840);
    auto t5 = count_V_terms(5);
    REQUIRE(t5.size() == 2);
    CHECK(t5[0].value == 60);
    CHECK(t5[1].l == 0);
    CHECK(t5[1].value == 12);

    // Large n stays exact.
    CHECK(count_U(40).value == big_binomial(40, 20) * big_binomial(400, 10) / 2);

    CHECK(count_by_enumeration(5, 2).value == 72);
    CHECK(count_by_enumeration(8, 2).value == 5040);
    CHECK(count_by_enumeration(5, 2).method == CountMethod::enumeration);
}

TEST_CASE("closed count at n = 4 overcounts") {
    // The formula includes four |B| = 1 ideals (a triangle on three vertices);
    // those miss the fourth variable from below and are not f-ideals.
    CHECK(count_V(4).value == 16);
    CHECK(count_by_enumeration(4, 2).value == 12);
    CHECK(w_l_nonempty(4, 1));
    for (int j = 1; j <= 4; ++j) {
        Mask b = Mask{1} << (j - 1);
        CHECK_FALSE(is_f_ideal(Ideal(two_part_construction(4, b))).is_f_ideal);
    }
}

TEST_CASE("type classes reconcile with the count terms") {
    for (int n : {5, 8}) {
        std::map<int, BigInt> classes;
        enumerate_f_ideals(n, 2, {}, [&](const Ideal& i) { classes[detect_type(i).l] += 1; });
        std::map<int, BigInt> terms;
        for (const auto& t : count_V_terms(n)) terms[t.l] = t.value;
        CHECK(classes == terms);
        for (int l = 1; l <= n / 2; ++l) CHECK(w_l_nonempty(n, l) == (classes.count(l) > 0));
    }
    std::map<int, BigInt> four;
    enumerate_f_ideals(4, 2, {}, [&](const Ideal& i) { four[detect_type(i).l] += 1; });
    CHECK(four == std::map<int, BigInt>{{2, 12}});
}

TEST_CASE("index inequality") {
    CHECK(w_l_nonempty(8, 4));
    CHECK(w_l_nonempty(8, 3));
    CHECK_FALSE(w_l_nonempty(8, 2));
    CHECK_FALSE(w_l_nonempty(8, 1));
    CHECK(w_l_nonempty(9, 4));
    CHECK(w_l_nonempty(9, 3));
    CHECK_FALSE(w_l_nonempty(9, 2));
    CHECK_THROWS_AS((void)w_l_nonempty(6, 3), InputError);
    CHECK_THROWS_AS((void)w_l_nonempty(8, 5), InputError);
    CHECK_THROWS_AS((void)w_l_nonempty(8, 0), InputError);
}

TEST_CASE("balanced witnesses are counted by the U formula") {
    for (int n : {4, 5, 8}) {
        BigInt balanced = 0;
        enumerate_f_ideals(n, 2, {}, [&](const Ideal& i) {
            auto t = detect_type(i);
            if (t.kind == IdealType::type_l && t.l == n / 2) balanced += 1;
        });
        CHECK(balanced == count_U(n).value);
    }
}

TEST_CASE("construction") {
    auto i = construct_f_ideal(4, 0b0011, set(4, "1.3"));
    CHECK(i.generators() == set(4, "1.2,1.3,3.4"));
    CHECK(is_f_ideal(i).is_f_ideal);

    CHECK_THROWS_AS((void)construct_f_ideal(6, 0b000111, MonomialSet(6)), InputError);
    CHECK_THROWS_AS((void)construct_f_ideal(4, 0b0011, set(4, "1.2")), InputError);
    CHECK_THROWS_AS((void)construct_f_ideal(4, 0b0011, set(4, "1.3,1.4")), InputError);
    CHECK_THROWS_AS((void)construct_f_ideal(4, 0b0011, set(4, "1.3.4")), InputError);
    // Sizes line up but x4 is never covered from below.
    CHECK_THROWS_AS((void)construct_f_ideal(4, 0b0001, MonomialSet(4)), ConstructionError);
    CHECK_THROWS_AS((void)auto_extra(4, 0b0001), ConstructionError);

    CHECK(auto_extra(4, 0b0011) == set(4, "1.3"));
    auto e8 = auto_extra(8, 0b00001111);
    CHECK(e8.size() == 2);
    CHECK(is_f_ideal(construct_f_ideal(8, 0b00001111, e8)).is_f_ideal);
    auto e5 = auto_extra(5, 0b00011);
    CHECK(is_f_ideal(construct_f_ideal(5, 0b00011, e5)).is_f_ideal);
}

TEST_CASE("the 5-cycle family") {
    auto fam = c5_family();
    CHECK(fam.size() == 12);
    for (const auto& i : fam) {
        CHECK(is_f_ideal(i).is_f_ideal);
        CHECK(detect_type(i).kind == IdealType::c5_exceptional);
    }
    CHECK(std::is_sorted(fam.begin(), fam.end(),
                         [](const Ideal& a, const Ideal& b) { return a.generators().supports() < b.generators().supports(); }));
    std::vector<std::vector<Mask>> typeless;
    for (const auto& i : list_f_ideals(5, 2)) {
        if (detect_type(i).kind == IdealType::c5_exceptional) typeless.push_back(i.generators().supports());
    }
    CHECK(typeless == as_masks(fam));
}
