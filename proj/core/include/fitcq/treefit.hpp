#ifndef FITCQ_TREEFIT_HPP
#define FITCQ_TREEFIT_HPP

#include <string>
#include <utility>
#include <vector>

#include "fitcq/cqfit.hpp"
#include "fitcq/model.hpp"

namespace fitcq {

/// Witness for the greatest simulation between two binary-schema instances.
struct SimulationRelation {
    std::vector<std::pair<std::string, std::string>> pairs;

    bool contains(const std::string& a, const std::string& b) const;
};

/// Greatest simulation of i in j (forward and backward role matching plus
/// unary preservation).
SimulationRelation max_simulation(const PointedInstance& i, const PointedInstance& j,
                                  const Options& opts = default_options());

/// (e1, a) simulates into (e2, b) for the distinguished values; arity 1.
bool simulates(const PointedInstance& e1, const PointedInstance& e2,
               const Options& opts = default_options());

/// m-finite unraveling at the distinguished value: the tree of role paths of
/// length (number of values) at most m.
PointedInstance unravel(const PointedInstance& e, int m,
                        const Options& opts = default_options());

/// Throws NotATreeError / NonBinarySchemaError when q is not a tree CQ.
void require_tree_cq(const ConjunctiveQuery& q);

bool verify_tree_fitting(FittingKind kind, const ConjunctiveQuery& q,
                         const LabeledExamples& examples,
                         const Options& opts = default_options());

/// Frontier of a tree CQ w.r.t. tree CQs (generalize + compensate).
Frontier tree_frontier(const ConjunctiveQuery& q, const Options& opts = default_options());

SearchOutcome exists_tree_fitting(const LabeledExamples& examples, int depth_cap,
                                  const Options& opts = default_options());

SearchOutcome exists_most_specific_tree(const LabeledExamples& examples, int depth_cap,
                                        const Options& opts = default_options());

SearchOutcome search_weakly_most_general_tree(const LabeledExamples& examples, int size_cap,
                                              const Options& opts = default_options());

bool verify_tree_basis(const std::vector<ConjunctiveQuery>& qs,
                       const LabeledExamples& examples,
                       const Options& opts = default_options());

SearchOutcome search_tree_basis(const LabeledExamples& examples, int size_cap,
                                const Options& opts = default_options());

/// All tree CQs with at most max_nodes variables and successor degree at most
/// max_degree (negative for unbounded), canonicalized, ordered by node count.
std::vector<ConjunctiveQuery> enumerate_tree_cqs(const Schema& schema, int max_nodes,
                                                 int max_degree = -1);

} // namespace fitcq

#endif
