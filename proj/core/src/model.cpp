#include "fitcq/model.hpp"

#include <algorithm>
#include <set>

namespace fitcq {

int Schema::arity_of(const std::string& relation) const {
    auto it = relations.find(relation);
    if (it == relations.end())
        throw WellDefinednessError("unknown relation '" + relation + "'");
    return it->second;
}

bool Schema::is_binary() const {
    for (const auto& [name, arity] : relations)
        if (arity > 2) return false;
    return true;
}

void Schema::validate() const {
    for (const auto& [name, arity] : relations) {
        if (name.empty())
            throw WellDefinednessError("empty relation name");
        if (arity < 1)
            throw WellDefinednessError("relation '" + name + "' has arity " +
                                       std::to_string(arity) + ", must be >= 1");
    }
}

PointedInstance::PointedInstance(Schema schema, std::vector<Fact> facts,
                                 std::vector<std::string> distinguished)
    : schema_(std::move(schema)),
      facts_(std::move(facts)),
      distinguished_(std::move(distinguished)) {
    schema_.validate();
    for (const Fact& f : facts_) {
        int arity = schema_.arity_of(f.relation);
        if (static_cast<int>(f.args.size()) != arity)
            throw WellDefinednessError("fact over '" + f.relation + "' has " +
                                       std::to_string(f.args.size()) +
                                       " arguments, expected " + std::to_string(arity));
    }
    std::sort(facts_.begin(), facts_.end());
    facts_.erase(std::unique(facts_.begin(), facts_.end()), facts_.end());
}

std::vector<std::string> PointedInstance::active_domain() const {
    std::set<std::string> dom;
    for (const Fact& f : facts_)
        dom.insert(f.args.begin(), f.args.end());
    return {dom.begin(), dom.end()};
}

bool PointedInstance::distinguished_in_adom() const {
    auto dom = active_domain();
    for (const std::string& d : distinguished_)
        if (!std::binary_search(dom.begin(), dom.end(), d)) return false;
    return true;
}

bool PointedInstance::has_unp() const {
    std::set<std::string> seen;
    for (const std::string& d : distinguished_)
        if (!seen.insert(d).second) return false;
    return true;
}

UnionOfCqs::UnionOfCqs(std::vector<ConjunctiveQuery> qs) : disjuncts(std::move(qs)) {
    if (disjuncts.empty())
        throw WellDefinednessError("a UCQ must have at least one disjunct");
    for (const ConjunctiveQuery& q : disjuncts) {
        require_same_schema(q.schema(), disjuncts.front().schema());
        if (q.arity() != disjuncts.front().arity())
            throw ArityMismatchError("UCQ disjuncts must share one arity");
    }
}

ConjunctiveQuery canonical_cq(const PointedInstance& e) {
    if (!e.distinguished_in_adom())
        throw WellDefinednessError(
            "canonical CQ undefined: a distinguished value lies outside the active domain");
    return ConjunctiveQuery{e};
}

PointedInstance canonical_instance(const ConjunctiveQuery& q) {
    return q.body;
}

std::vector<Violation> validate_collection(const LabeledExamples& examples) {
    std::vector<Violation> out;
    auto check = [&](const std::vector<PointedInstance>& side, const std::string& name) {
        for (size_t i = 0; i < side.size(); ++i) {
            const PointedInstance& e = side[i];
            std::string where = name + "[" + std::to_string(i) + "]";
            if (!(e.schema() == examples.schema))
                out.push_back({where, "schema", "example schema differs from the collection schema"});
            if (e.arity() != examples.arity)
                out.push_back({where, "arity",
                               "example arity " + std::to_string(e.arity()) +
                                   " differs from collection arity " +
                                   std::to_string(examples.arity)});
            if (!e.distinguished_in_adom())
                out.push_back({where, "data-example",
                               "a distinguished value lies outside the active domain"});
        }
    };
    check(examples.positives, "positives");
    check(examples.negatives, "negatives");
    return out;
}

PointedInstance all_facts_singleton(const Schema& schema, int arity) {
    const std::string star = "*";
    std::vector<Fact> facts;
    for (const auto& [name, relArity] : schema.relations)
        facts.push_back({name, std::vector<std::string>(relArity, star)});
    return PointedInstance(schema, std::move(facts),
                           std::vector<std::string>(arity, star));
}

void require_same_schema(const Schema& a, const Schema& b) {
    if (!(a == b))
        throw SchemaMismatchError("operands use different schemas");
}

void require_same_shape(const PointedInstance& a, const PointedInstance& b) {
    require_same_schema(a.schema(), b.schema());
    if (a.arity() != b.arity())
        throw ArityMismatchError("operands have arities " + std::to_string(a.arity()) +
                                 " and " + std::to_string(b.arity()));
}

} // namespace fitcq
