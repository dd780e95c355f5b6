#include <doctest.h>

#include "oracles.hpp"
#include "topodyn/checkers.hpp"

using namespace topodyn;

TEST_CASE("two-point fixture with the identity partition") {
    FinSpace x = sierpinski();
    Relation e = Relation::diagonal(2);

    Relation h = hat(x, e);
    CHECK(h.row[0] == make_set(2, {0}));
    CHECK(h.row[1] == make_set(2, {0, 1}));

    Verdict pap = is_pointwise_almost_periodic(x, e);
    CHECK_FALSE(pap.value);
    REQUIRE(pap.witness);
    CHECK(pap.witness->kind == "symmetry-failure");

    Verdict rc = is_r_closed(x, e);
    CHECK_FALSE(rc.value);
    REQUIRE(rc.witness);
    CHECK(rc.witness->kind == "closure-gap");
    CHECK(rc.witness->points == std::vector<int>{0, 1});

    CHECK_FALSE(is_d_stable(x, e));
    CHECK(is_l_stable(x, e).value);  // the only open superset of cl-rows is saturated
    CHECK_FALSE(is_minimal(x, e).value);
    CHECK(almost_periodic_points(x, e) == make_set(2, {0}));

    Verdict qh = quotient_is_hausdorff(x, e);
    CHECK_FALSE(qh.value);
    CHECK(qh.note);  // cl-rows are not an equivalence, so the orbit-class relation steps in
}

TEST_CASE("indiscrete space: everything collapses to one minimal class") {
    FinSpace x = indiscrete_space(3);
    Relation e = Relation::diagonal(3);
    CHECK(is_pointwise_almost_periodic(x, e).value);
    CHECK(is_r_closed(x, e).value);
    CHECK(is_minimal(x, e).value);
    CHECK(almost_periodic_points(x, e).all());
}

TEST_CASE("discrete space: every partition is closed and stable") {
    FinSpace x = discrete_space(4);
    for (const auto& e : all_partitions(4)) {
        CHECK(is_r_closed(x, e).value);
        CHECK(is_l_stable(x, e).value);
        CHECK(is_pointwise_almost_periodic(x, e).value);
        CHECK(quotient_is_hausdorff(x, e).value);
    }
}

TEST_CASE("l-stability matches the exhaustive-open-set oracle") {
    for (const auto& x : all_topologies(3))
        for (const auto& e : all_partitions(3))
            CHECK(is_l_stable(x, e).value == oracles::l_stable_oracle(x, e));
}

TEST_CASE("r-closedness matches the explicit product-space oracle") {
    for (const auto& x : all_topologies(3)) {
        for (const auto& e : all_partitions(3)) {
            Relation h = hat(x, e);
            CHECK(is_r_closed(x, e).value == (oracles::bar_oracle(x, h) == h));
        }
    }
}

TEST_CASE("minimality means every class is dense") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        FinSpace x = random_space(5, rng);
        Relation e = random_equivalence(5, rng);
        bool dense = true;
        for (int p = 0; p < 5; ++p)
            if (oracles::closure_oracle(x, e.row[p]) != x.whole()) dense = false;
        CHECK(is_minimal(x, e).value == dense);
    }
}

TEST_CASE("weak almost periodicity holds with its standing note") {
    FinSpace x = sierpinski();
    Verdict v = is_weakly_almost_periodic(x, Relation::diagonal(2));
    CHECK(v.value);
    CHECK(v.note);
}

TEST_CASE("almost periodic points agree with the definitional scan") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        FinSpace x = random_space(5, rng);
        Relation e = random_equivalence(5, rng);
        Relation h = hat(x, e);
        PointSet expect(5);
        for (int p = 0; p < 5; ++p) {
            bool ok = true;
            for (int y : members(h.row[p]))
                if (h.row[y] != h.row[p]) ok = false;
            if (ok) expect.set(p);
        }
        CHECK(almost_periodic_points(x, e) == expect);  // also exercises the cross-check
    }
}

TEST_CASE("quotient carries the finest topology with open preimages") {
    FinSpace chain = build_space(3, {make_set(3, {0}), make_set(3, {0, 1})});
    Relation e = Relation::from_partition(3, {{0, 2}, {1}});
    Quotient q = quotient(chain, e);
    REQUIRE(q.space.n() == 2);
    // the only saturated opens upstairs are the empty set and everything
    CHECK(q.space.min_open(0) == make_set(2, {0, 1}));
    CHECK(q.space.min_open(1) == make_set(2, {0, 1}));
    CHECK(q.point_class[0] == q.point_class[2]);
    CHECK(q.point_class[0] != q.point_class[1]);

    CHECK_THROWS_AS(quotient(chain, Relation::from_pairs(3, {{0, 1}})), NotAnEquivalence);
}

TEST_CASE("quotient opens are exactly the saturated opens upstairs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        FinSpace x = random_space(5, rng);
        Relation e = random_equivalence(5, rng);
        Quotient q = quotient(x, e);
        for (const auto& u : all_open_sets(q.space)) {
            PointSet pre(5);
            for (int c : members(u))
                for (int m : q.class_members[c]) pre.set(m);
            CHECK(x.is_open(pre));
        }
        // conversely, saturated opens descend to opens
        for (const auto& u : all_open_sets(x)) {
            if (!is_saturated(e, u)) continue;
            PointSet down(q.space.n());
            for (int p : members(u)) down.set(q.point_class[p]);
            CHECK(q.space.is_open(down));
        }
    }
}

TEST_CASE("analyze produces the full verdict set and passes its cross-checks") {
    Report r = analyze(sierpinski(), Relation::diagonal(2));
    CHECK_FALSE(r.get("pap_decomposition"));
    CHECK_FALSE(r.get("r_closed"));
    CHECK_FALSE(r.get("d_stable"));
    CHECK(r.get("l_stable"));
    CHECK(r.get("weakly_almost_periodic"));
    CHECK_FALSE(r.get("minimal"));
    CHECK(r.get("compact_classes"));
    CHECK(r.get("pointwise_periodic_like"));
    CHECK_FALSE(r.get("orbit_class_hausdorff"));
    CHECK_THROWS_AS(r.get("no_such_verdict"), std::out_of_range);

    auto j = r.to_json();
    CHECK(j.contains("verdicts"));
    CHECK(j.contains("witnesses"));
    CHECK(j.contains("notes"));
    CHECK(j["verdicts"]["r_closed"] == false);
}

TEST_CASE("the lemma battery is clean on every 3-point instance") {
    std::vector<Violation> violations;
    std::size_t count = 0;
    for (const auto& x : all_topologies(3))
        for (const auto& e : all_partitions(3))
            check_instance(x, e, count++, violations);
    CHECK(count == 145);
    CHECK(violations.empty());
}

TEST_CASE("theorem_battery wraps check_instance") {
    std::vector<Instance> instances;
    for (const auto& e : all_partitions(2)) instances.push_back({sierpinski(), e});
    CHECK(theorem_battery(instances).empty());
}
