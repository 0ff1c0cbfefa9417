#include <doctest.h>

#include <fitcq/document.hpp>
#include <fitcq/model.hpp>
#include <fitcq/oracle.hpp>

using namespace fitcq;

namespace {

Schema binary_schema() { return Schema{{{"R", 2}}}; }

PointedInstance inst(const Schema& s, std::vector<Fact> facts,
                     std::vector<std::string> dist) {
    return PointedInstance(s, std::move(facts), std::move(dist));
}

} // namespace

TEST_CASE("facts are stored sorted and deduplicated") {
    Schema s = binary_schema();
    PointedInstance e = inst(s, {{"R", {"b", "a"}}, {"R", {"a", "b"}}, {"R", {"b", "a"}}}, {});
    REQUIRE(e.facts().size() == 2);
    CHECK(e.facts()[0] == Fact{"R", {"a", "b"}});
    CHECK(e.facts()[1] == Fact{"R", {"b", "a"}});
}

TEST_CASE("schema validation rejects bad arities and mismatched facts") {
    CHECK_THROWS_AS(PointedInstance(Schema{{{"R", 0}}}, {}, {}), WellDefinednessError);
    CHECK_THROWS_AS(inst(binary_schema(), {{"R", {"a"}}}, {}), WellDefinednessError);
    CHECK_THROWS_AS(inst(binary_schema(), {{"S", {"a", "b"}}}, {}), WellDefinednessError);
}

TEST_CASE("canonical CQ of the running example") {
    // facts R(a,b), R(b,a), R(b,b), pointed at b
    Schema s = binary_schema();
    PointedInstance e =
        inst(s, {{"R", {"a", "b"}}, {"R", {"b", "a"}}, {"R", {"b", "b"}}}, {"b"});
    ConjunctiveQuery q = canonical_cq(e);
    CHECK(q.arity() == 1);
    CHECK(q.safe());
    CHECK(q.body == e);
    CHECK(canonical_instance(q) == e);
}

TEST_CASE("canonical CQ of a Boolean single fact") {
    Schema s{{{"P", 1}}};
    ConjunctiveQuery q = canonical_cq(inst(s, {{"P", {"a"}}}, {}));
    CHECK(q.arity() == 0);
    CHECK(q.body.facts().size() == 1);
}

TEST_CASE("canonical CQ rejects distinguished values outside the active domain") {
    Schema s = binary_schema();
    CHECK_THROWS_AS(canonical_cq(inst(s, {{"R", {"a", "b"}}}, {"c"})), WellDefinednessError);
}

TEST_CASE("canonical instance of canonical CQ is the identity on data examples") {
    Schema s = binary_schema();
    int cases = 0;
    oracle::enumerate_instances(s, 1, 2, [&](const PointedInstance& e) {
        CHECK(canonical_instance(canonical_cq(e)) == e);
        ++cases;
        return true;
    });
    CHECK(cases > 0);
}

TEST_CASE("validate_collection diagnostics") {
    Schema s = binary_schema();
    LabeledExamples ok;
    ok.schema = s;
    ok.arity = 0;
    ok.positives.push_back(inst(s, {{"R", {"a", "b"}}}, {}));
    CHECK(validate_collection(ok).empty());

    LabeledExamples arityMix = ok;
    arityMix.negatives.push_back(inst(s, {{"R", {"a", "b"}}}, {"a"}));
    auto violations = validate_collection(arityMix);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "arity");

    LabeledExamples inactive;
    inactive.schema = s;
    inactive.arity = 1;
    inactive.positives.push_back(inst(s, {{"R", {"a", "b"}}}, {"c"}));
    violations = validate_collection(inactive);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "data-example");
}

TEST_CASE("all-facts singleton") {
    Schema s{{{"R", 2}, {"P", 1}}};
    PointedInstance top = all_facts_singleton(s, 1);
    CHECK(top.facts().size() == 2);
    CHECK(top.distinguished() == std::vector<std::string>{"*"});
    CHECK(top.distinguished_in_adom());
}

TEST_CASE("serialization round trips for the four document types") {
    Schema s{{{"R", 2}, {"P", 1}}};
    PointedInstance e = inst(s, {{"R", {"a", "b"}}, {"P", {"a"}}}, {"a"});
    CHECK(parse_instance(serialize(e)) == e);

    ConjunctiveQuery q = canonical_cq(e);
    CHECK(parse_cq(serialize(q)) == q);

    UnionOfCqs u({q, canonical_cq(inst(s, {{"P", {"x"}}}, {"x"}))});
    CHECK(parse_ucq(serialize(u)) == u);

    LabeledExamples ex;
    ex.schema = s;
    ex.arity = 1;
    ex.positives.push_back(e);
    CHECK(parse_examples(serialize(ex)) == ex);

    LabeledExamples empty;
    empty.schema = s;
    empty.arity = 2;
    CHECK(parse_examples(serialize(empty)) == empty);
}

TEST_CASE("serialization round trips over enumerated instances") {
    Schema s{{{"R", 2}, {"P", 1}}};
    int cases = 0;
    oracle::enumerate_instances(s, 0, 2, [&](const PointedInstance& e) {
        CHECK(parse_instance(serialize(e)) == e);
        ++cases;
        return true;
    });
    CHECK(cases >= 20);
}

TEST_CASE("documents are deterministic and carry fixed field order") {
    Schema s{{{"R", 2}}};
    PointedInstance e = inst(s, {{"R", {"b", "a"}}, {"R", {"a", "b"}}}, {"a"});
    std::string text = serialize(e);
    CHECK(text ==
          R"({"schema":{"R":2},"kind":"instance","body":{"facts":[["R","a","b"],["R","b","a"]],"distinguished":["a"]}})");
}

TEST_CASE("malformed documents raise diagnostics") {
    CHECK_THROWS_AS(parse_document("{"), DocumentError);
    CHECK_THROWS_AS(parse_document(R"({"kind":"instance"})"), DocumentError);
    CHECK_THROWS_AS(parse_document(R"({"schema":{"R":2},"kind":"widget","body":{}})"),
                    DocumentError);
}
