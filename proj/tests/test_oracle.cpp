#include <doctest.h>

#include <fitcq/frontier_duality.hpp>
#include <fitcq/homcore.hpp>
#include <fitcq/oracle.hpp>

using namespace fitcq;
using namespace fitcq::oracle;

TEST_CASE("instance enumeration counts") {
    Schema unary{{{"P", 1}}};
    CHECK(enumerate_instances(unary, 0, 1).size() == 2); // {} and {P(a)}

    Schema binary{{{"R", 2}}};
    CHECK(enumerate_instances(binary, 0, 1).size() == 2); // {} and the loop
    // regression value, computed once by canonical-form enumeration
    CHECK(enumerate_instances(binary, 0, 2).size() == 10);
}

TEST_CASE("enumeration is duplicate-free up to isomorphism and deterministic") {
    Schema s{{{"R", 2}}};
    auto first = enumerate_instances(s, 1, 2);
    auto second = enumerate_instances(s, 1, 2);
    CHECK(first == second);
    for (size_t i = 0; i < first.size(); ++i)
        for (size_t j = i + 1; j < first.size(); ++j)
            CHECK(!is_isomorphic(first[i], first[j]));
    // every instance over two named values appears up to isomorphism
    PointedInstance sample(s, {{"R", {"x", "y"}}, {"R", {"y", "y"}}}, {"y"});
    bool found = false;
    for (const PointedInstance& e : first)
        if (is_isomorphic(e, sample)) found = true;
    CHECK(found);
}

TEST_CASE("cq enumeration yields exactly the safe queries") {
    Schema unary{{{"P", 1}}};
    auto qs = enumerate_cqs(unary, 1, 1);
    REQUIRE(qs.size() == 1);
    CHECK(qs[0].body.facts() == std::vector<Fact>{{"P", {"a"}}});
    CHECK(qs[0].safe());

    Schema binary{{{"R", 2}}};
    // regression value, frozen after the first run
    CHECK(enumerate_cqs(binary, 0, 2).size() == 10);
    for (const ConjunctiveQuery& q : enumerate_cqs(binary, 1, 2)) CHECK(q.safe());
}

TEST_CASE("filters prune as documented") {
    Schema s{{{"R", 2}}};
    EnumFilter filter;
    filter.c_acyclic_only = true;
    for (const PointedInstance& e : enumerate_instances(s, 0, 3, filter))
        CHECK(is_c_acyclic(e));
    filter = {};
    filter.max_facts = 2;
    for (const PointedInstance& e : enumerate_instances(s, 0, 3, filter))
        CHECK(e.facts().size() <= 2);
}

TEST_CASE("isomorphism checks") {
    CHECK(is_isomorphic(directed_cycle(3), directed_cycle(3)));
    CHECK(!is_isomorphic(directed_cycle(3), directed_cycle(4)));
    Schema s{{{"R", 2}}};
    PointedInstance a(s, {{"R", {"x", "y"}}}, {"x"});
    PointedInstance b(s, {{"R", {"u", "w"}}}, {"u"});
    PointedInstance c(s, {{"R", {"u", "w"}}}, {"w"});
    CHECK(is_isomorphic(a, b));
    CHECK(!is_isomorphic(a, c));
}

TEST_CASE("brute duality check on the GHRV pair") {
    DualitySide f{{directed_path(3)}};
    DualitySide dGood{{transitive_tournament(3)}};
    DualitySide dBad{{transitive_tournament(2)}};
    CHECK(brute_check_duality(f, dGood, 4));
    CHECK(!brute_check_duality(f, dBad, 3));
}

TEST_CASE("brute duality check trivial cases") {
    Schema s{{{"R", 2}}};
    DualitySide empty;
    DualitySide top{{all_facts_singleton(s, 0)}};
    CHECK(brute_check_duality(empty, top, 3));
}

TEST_CASE("fixture generators") {
    PointedInstance c3 = directed_cycle(3);
    CHECK(c3.facts().size() == 3);
    CHECK(clique(4).facts().size() == 12);
    CHECK(directed_path(3).facts().size() == 3);
    CHECK(transitive_tournament(3).facts().size() == 3);

    LabeledExamples primes = prime_cycle_examples(3);
    REQUIRE(primes.positives.size() == 2);
    CHECK(is_isomorphic(primes.positives[0], directed_cycle(3)));
    CHECK(is_isomorphic(primes.positives[1], directed_cycle(5)));
    REQUIRE(primes.negatives.size() == 1);
    CHECK(is_isomorphic(primes.negatives[0], directed_cycle(2)));

    LabeledExamples tlb = tree_lower_bound(1);
    REQUIRE(tlb.positives.size() == 1);
    CHECK(tlb.positives[0].facts().size() == 5); // R,L forwards and back, plus A
    CHECK(tlb.negatives.size() == 3);
    CHECK(tlb.arity == 1);

    LabeledExamples unique = unit_examples("sec3.4-unique");
    CHECK(unique.positives.size() == 1);
    CHECK(unique.negatives.size() == 1);
    CHECK(unique.positives[0].distinguished() == std::vector<std::string>{"b"});

    CHECK_THROWS_AS(unit_examples("nonsense"), InvalidParameterError);
    CHECK(std::holds_alternative<PointedInstance>(gen_fixture("cycle:5")));
    CHECK(std::holds_alternative<LabeledExamples>(gen_fixture("sec4")));
}
