#include "fitcq/ucqfit.hpp"

#include <algorithm>

namespace fitcq {
namespace {

void require_ucq_matches(const UnionOfCqs& q, const LabeledExamples& examples) {
    require_same_schema(q.schema(), examples.schema);
    if (q.arity() != examples.arity)
        throw ArityMismatchError("UCQ arity does not match example arity");
}

bool ucq_fits(const UnionOfCqs& q, const LabeledExamples& examples, const Options& opts) {
    for (const PointedInstance& e : examples.positives) {
        bool satisfied = false;
        for (const ConjunctiveQuery& d : q.disjuncts)
            if (homomorphic(d.body, e, opts)) { satisfied = true; break; }
        if (!satisfied) return false;
    }
    for (const PointedInstance& e : examples.negatives)
        for (const ConjunctiveQuery& d : q.disjuncts)
            if (homomorphic(d.body, e, opts)) return false;
    return true;
}

UnionOfCqs positive_union(const LabeledExamples& examples) {
    std::vector<ConjunctiveQuery> disjuncts;
    for (const PointedInstance& e : examples.positives) disjuncts.push_back(canonical_cq(e));
    return UnionOfCqs(std::move(disjuncts));
}

bool ucq_hom_equivalent(const UnionOfCqs& a, const UnionOfCqs& b, const Options& opts) {
    return ucq_homomorphism(a, b, opts) && ucq_homomorphism(b, a, opts);
}

} // namespace

bool ucq_homomorphism(const UnionOfCqs& q, const UnionOfCqs& q2, const Options& opts) {
    require_same_schema(q.schema(), q2.schema());
    if (q.arity() != q2.arity()) throw ArityMismatchError("UCQ arities differ");
    for (const ConjunctiveQuery& target : q2.disjuncts) {
        bool reached = false;
        for (const ConjunctiveQuery& source : q.disjuncts)
            if (homomorphic(source.body, target.body, opts)) { reached = true; break; }
        if (!reached) return false;
    }
    return true;
}

bool verify_fitting_ucq(const UnionOfCqs& q, const LabeledExamples& examples,
                        const Options& opts) {
    require_ucq_matches(q, examples);
    return ucq_fits(q, examples, opts);
}

bool verify_extremal_ucq(UcqKind kind, const UnionOfCqs& q, const LabeledExamples& examples,
                         const Options& opts) {
    require_ucq_matches(q, examples);
    switch (kind) {
    case UcqKind::Any:
        return ucq_fits(q, examples, opts);
    case UcqKind::MostSpecific: {
        if (!ucq_fits(q, examples, opts)) return false;
        if (examples.positives.empty()) return false;
        return ucq_hom_equivalent(q, positive_union(examples), opts);
    }
    case UcqKind::MostGeneral: {
        for (const PointedInstance& e : examples.positives) {
            bool satisfied = false;
            for (const ConjunctiveQuery& d : q.disjuncts)
                if (homomorphic(d.body, e, opts)) { satisfied = true; break; }
            if (!satisfied) return false;
        }
        DualitySide f;
        for (const ConjunctiveQuery& d : q.disjuncts)
            f.examples.push_back(canonical_instance(d));
        return check_hom_duality(f, DualitySide{examples.negatives}, opts);
    }
    case UcqKind::Unique: {
        if (examples.positives.empty()) return false;
        if (!ucq_hom_equivalent(q, positive_union(examples), opts)) return false;
        return check_hom_duality(DualitySide{examples.positives},
                                 DualitySide{examples.negatives}, opts);
    }
    }
    throw InvalidParameterError("unknown UCQ fitting kind");
}

SearchOutcome construct_most_specific_ucq(const LabeledExamples& examples,
                                          const Options& opts) {
    if (examples.positives.empty()) return SearchOutcome::not_exists();
    UnionOfCqs candidate = positive_union(examples);
    for (const PointedInstance& e : examples.negatives)
        for (const ConjunctiveQuery& d : candidate.disjuncts)
            if (homomorphic(d.body, e, opts)) return SearchOutcome::not_exists();
    SearchOutcome out;
    out.status = SearchStatus::Found;
    out.witnesses = candidate.disjuncts;
    return out;
}

SearchOutcome construct_most_general_ucq(const LabeledExamples& examples, int size_cap,
                                         const Options& opts) {
    PointedInstance top = all_facts_singleton(examples.schema, examples.arity);
    if (examples.negatives.empty())
        throw InvalidParameterError("most-general UCQ construction needs negative examples");
    if (!relativized_duality_exists(DualitySide{examples.negatives}, top, opts))
        return SearchOutcome::not_exists();
    DualitySide f = relativized_duality_construct(DualitySide{examples.negatives}, top,
                                                  size_cap, opts);
    // Disjuncts that map to a negative can never appear (members avoid every
    // negative example by construction); fitting can only fail on positives.
    std::vector<ConjunctiveQuery> disjuncts;
    for (const PointedInstance& member : f.examples) {
        if (!member.distinguished_in_adom()) continue;
        disjuncts.push_back(canonical_cq(compute_core(member, opts)));
    }
    for (const PointedInstance& e : examples.positives) {
        bool satisfied = false;
        for (const ConjunctiveQuery& d : disjuncts)
            if (homomorphic(d.body, e, opts)) { satisfied = true; break; }
        if (!satisfied) return SearchOutcome::not_exists();
    }
    if (disjuncts.empty()) return SearchOutcome::not_exists();
    std::sort(disjuncts.begin(), disjuncts.end(),
              [](const auto& a, const auto& b) { return a.body.facts() < b.body.facts(); });
    SearchOutcome out;
    out.status = SearchStatus::Found;
    out.witnesses = std::move(disjuncts);
    return out;
}

} // namespace fitcq
