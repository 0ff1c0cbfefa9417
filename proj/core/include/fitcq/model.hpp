#ifndef FITCQ_MODEL_HPP
#define FITCQ_MODEL_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fitcq/common.hpp"

namespace fitcq {

/// Relation name -> arity. Arities are >= 1.
struct Schema {
    std::map<std::string, int> relations;

    int arity_of(const std::string& relation) const;
    bool is_binary() const; // all arities <= 2
    void validate() const;

    bool operator==(const Schema&) const = default;
};

struct Fact {
    std::string relation;
    std::vector<std::string> args;

    auto operator<=>(const Fact&) const = default;
};

/// An instance (finite set of facts) together with a tuple of distinguished
/// values. Distinguished values may repeat and may lie outside the active
/// domain; data examples additionally require them to be active.
class PointedInstance {
public:
    PointedInstance() = default;
    PointedInstance(Schema schema, std::vector<Fact> facts,
                    std::vector<std::string> distinguished);

    const Schema& schema() const { return schema_; }
    const std::vector<Fact>& facts() const { return facts_; } // sorted, deduplicated
    const std::vector<std::string>& distinguished() const { return distinguished_; }

    int arity() const { return static_cast<int>(distinguished_.size()); }
    std::vector<std::string> active_domain() const; // sorted, unique
    bool distinguished_in_adom() const;
    bool has_unp() const; // distinguished values pairwise distinct

    bool operator==(const PointedInstance&) const = default;

private:
    Schema schema_;
    std::vector<Fact> facts_;
    std::vector<std::string> distinguished_;
};

/// A CQ is a pointed instance over variable identifiers; the distinguished
/// tuple lists the answer variables. `safe()` is false when some answer
/// variable occurs in no conjunct (frontier outputs may be unsafe).
struct ConjunctiveQuery {
    PointedInstance body;

    const Schema& schema() const { return body.schema(); }
    int arity() const { return body.arity(); }
    bool safe() const { return body.distinguished_in_adom(); }

    bool operator==(const ConjunctiveQuery&) const = default;
};

struct UnionOfCqs {
    std::vector<ConjunctiveQuery> disjuncts; // nonempty, uniform schema/arity

    UnionOfCqs() = default;
    explicit UnionOfCqs(std::vector<ConjunctiveQuery> qs);

    const Schema& schema() const { return disjuncts.front().schema(); }
    int arity() const { return disjuncts.front().arity(); }

    bool operator==(const UnionOfCqs&) const = default;
};

struct LabeledExamples {
    Schema schema;
    int arity = 0;
    std::vector<PointedInstance> positives;
    std::vector<PointedInstance> negatives;

    bool operator==(const LabeledExamples&) const = default;
};

struct Violation {
    std::string example;   // e.g. "positives[2]"
    std::string rule;      // which invariant is broken
    std::string detail;
};

ConjunctiveQuery canonical_cq(const PointedInstance& e);
PointedInstance canonical_instance(const ConjunctiveQuery& q);
std::vector<Violation> validate_collection(const LabeledExamples& examples);

/// Single-element instance with every possible fact, pointed at the constant
/// tuple of the given arity (the direct product of no instances).
PointedInstance all_facts_singleton(const Schema& schema, int arity);

void require_same_schema(const Schema& a, const Schema& b);
void require_same_shape(const PointedInstance& a, const PointedInstance& b);

} // namespace fitcq

#endif
