#include <doctest.h>

#include "topodyn/actions.hpp"

using namespace topodyn;

TEST_CASE("homeomorphism verification") {
    FinSpace s = sierpinski();
    CHECK(verify_homeomorphism(s, {0, 1}).value);
    Verdict swap = verify_homeomorphism(s, {1, 0});  // swaps the open and closed point
    CHECK_FALSE(swap.value);
    REQUIRE(swap.witness);
    CHECK(swap.witness->kind == "continuity-failure");

    FinSpace d = discrete_space(4);
    CHECK(verify_homeomorphism(d, {1, 2, 3, 0}).value);

    CHECK_THROWS_AS(verify_homeomorphism(d, {0, 0, 1, 2}), NotABijection);
    CHECK_THROWS_AS(verify_homeomorphism(d, {0, 1}), NotABijection);
}

TEST_CASE("orbit relation from generators") {
    ActionSpec cycle{discrete_space(4), {{1, 2, 3, 0}}, GroupKind::Z};
    CHECK(orbit_relation(cycle) == Relation::full(4));

    ActionSpec two{discrete_space(4), {{1, 0, 3, 2}}, GroupKind::Z};
    CHECK(orbit_relation(two) == Relation::from_partition(4, {{0, 1}, {2, 3}}));

    ActionSpec bad{sierpinski(), {{1, 0}}, GroupKind::Z};
    CHECK_THROWS_AS(orbit_relation(bad), InvalidGenerator);
}

TEST_CASE("orbit relations are invariant under relabeling") {
    // conjugating the generator by a permutation permutes the orbit classes
    std::vector<int> g = {1, 2, 0, 4, 3};
    std::vector<int> p = {4, 3, 2, 1, 0};
    std::vector<int> conj(5);
    for (int i = 0; i < 5; ++i) conj[p[i]] = p[g[i]];
    Relation a = orbit_relation({discrete_space(5), {g}, GroupKind::Z});
    Relation b = orbit_relation({discrete_space(5), {conj}, GroupKind::Z});
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(a.at(i, j) == b.at(p[i], p[j]));
}

TEST_CASE("syndetic gaps on a discrete cycle") {
    ActionSpec cycle{discrete_space(4), {{1, 2, 3, 0}}, GroupKind::Z};
    SyndeticReport rep = flow_pap_syndetic(cycle);
    CHECK(rep.value);
    CHECK(rep.max_gap == 4);  // a singleton neighborhood is revisited every 4 steps

    ActionSpec indis{indiscrete_space(4), {{1, 2, 3, 0}}, GroupKind::Z};
    CHECK(flow_pap_syndetic(indis).max_gap == 1);  // the only neighborhood is everything

    ActionSpec fin{discrete_space(3), {{1, 2, 0}, {2, 0, 1}}, GroupKind::Finite};
    SyndeticReport frep = flow_pap_syndetic(fin);
    CHECK(frep.value);
    CHECK(frep.max_gap == 1);

    ActionSpec twogen{discrete_space(3), {{1, 2, 0}, {2, 0, 1}}, GroupKind::Z};
    CHECK_THROWS_AS(flow_pap_syndetic(twogen), InvalidGenerator);
}

TEST_CASE("periodicity profile takes the lcm of cycle lengths") {
    ActionSpec a{discrete_space(5), {{1, 0, 3, 4, 2}}, GroupKind::Z};
    PeriodicityProfile p = periodicity_profile(a);
    CHECK(p.pointwise_periodic);
    CHECK(p.periodic);
    CHECK(p.max_order == 6);

    ActionSpec id{discrete_space(3), {{0, 1, 2}}, GroupKind::Z};
    CHECK(periodicity_profile(id).max_order == 1);
}
