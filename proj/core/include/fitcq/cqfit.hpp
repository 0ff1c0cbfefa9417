#ifndef FITCQ_CQFIT_HPP
#define FITCQ_CQFIT_HPP

#include <optional>
#include <vector>

#include "fitcq/frontier_duality.hpp"
#include "fitcq/model.hpp"

namespace fitcq {

enum class FittingKind { Any, MostSpecific, WeaklyMostGeneral, Unique };

enum class SearchStatus { Found, NotExists, NotUpToCap };

/// Three-valued result for procedures whose exact decision would need the
/// automata constructions that this artifact replaces by capped search.
struct SearchOutcome {
    SearchStatus status = SearchStatus::NotExists;
    std::optional<ConjunctiveQuery> witness;
    std::vector<ConjunctiveQuery> witnesses; // set-valued results (bases)
    int cap = 0;                             // the cap hit, for NotUpToCap
    int depth = 0;                           // unraveling depth of a Found tree witness

    static SearchOutcome found(ConjunctiveQuery q, int depth = 0) {
        SearchOutcome o;
        o.status = SearchStatus::Found;
        o.witness = std::move(q);
        o.depth = depth;
        return o;
    }
    static SearchOutcome found_set(std::vector<ConjunctiveQuery> qs) {
        SearchOutcome o;
        o.status = SearchStatus::Found;
        o.witnesses = std::move(qs);
        return o;
    }
    static SearchOutcome not_exists() { return SearchOutcome{}; }
    static SearchOutcome not_up_to_cap(int cap) {
        SearchOutcome o;
        o.status = SearchStatus::NotUpToCap;
        o.cap = cap;
        return o;
    }
};

/// The direct product of the positive examples (the all-facts singleton when
/// there are none).
PointedInstance positive_product(const LabeledExamples& examples,
                                 const Options& opts = default_options());

bool verify_fitting_cq(const ConjunctiveQuery& q, const LabeledExamples& examples,
                       const Options& opts = default_options());

bool verify_extremal_cq(FittingKind kind, const ConjunctiveQuery& q,
                        const LabeledExamples& examples,
                        const Options& opts = default_options());

SearchOutcome exists_fitting_cq(const LabeledExamples& examples,
                                const Options& opts = default_options());

SearchOutcome construct_most_specific_cq(const LabeledExamples& examples,
                                         const Options& opts = default_options());

SearchOutcome exists_unique_cq(const LabeledExamples& examples,
                               const Options& opts = default_options());

bool exists_basis_cq(const LabeledExamples& examples,
                     const Options& opts = default_options());

SearchOutcome construct_basis_cq(const LabeledExamples& examples, int size_cap,
                                 const Options& opts = default_options());

bool verify_basis_cq(const std::vector<ConjunctiveQuery>& qs,
                     const LabeledExamples& examples,
                     const Options& opts = default_options());

SearchOutcome search_weakly_most_general_cq(const LabeledExamples& examples, int size_cap,
                                            const Options& opts = default_options());

} // namespace fitcq

#endif
