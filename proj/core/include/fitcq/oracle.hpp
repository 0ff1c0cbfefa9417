#ifndef FITCQ_ORACLE_HPP
#define FITCQ_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fitcq/frontier_duality.hpp"
#include "fitcq/model.hpp"

namespace fitcq::oracle {

/// Filters applied during enumeration. Candidates violating a filter are
/// skipped; filters that are monotone under fact addition also prune the
/// generation tree.
struct EnumFilter {
    std::optional<int> max_facts;
    std::optional<int> max_degree;        // max occurrences of one value
    std::optional<int> max_components;    // fg-connected components
    bool c_acyclic_only = false;
};

/// Visits every pointed instance with at most max_values active-domain
/// values, up to isomorphism, in a fixed deterministic order. The consumer
/// returns false to stop.
void enumerate_instances(const Schema& schema, int arity, int max_values,
                         const std::function<bool(const PointedInstance&)>& consumer,
                         const EnumFilter& filter = {});

std::vector<PointedInstance> enumerate_instances(const Schema& schema, int arity,
                                                 int max_values,
                                                 const EnumFilter& filter = {});

/// All safe CQs with at most max_vars variables, up to isomorphism.
void enumerate_cqs(const Schema& schema, int arity, int max_vars,
                   const std::function<bool(const ConjunctiveQuery&)>& consumer,
                   const EnumFilter& filter = {});

std::vector<ConjunctiveQuery> enumerate_cqs(const Schema& schema, int arity, int max_vars,
                                            const EnumFilter& filter = {});

bool is_isomorphic(const PointedInstance& a, const PointedInstance& b);

/// Exhaustively tests the duality biconditional on every instance with at
/// most max_values values (restricted to e -> p when p is given). Validation
/// oracle, not a production decision.
bool brute_check_duality(const DualitySide& f, const DualitySide& d, int max_values,
                         const std::optional<PointedInstance>& p = std::nullopt,
                         const Options& opts = default_options());

// Fixture generators.
PointedInstance directed_cycle(int n);                // Boolean C_n
PointedInstance clique(int n);                        // Boolean K_n, symmetric irreflexive
PointedInstance directed_path(int edges);             // Boolean path with `edges` edges
PointedInstance transitive_tournament(int n);         // Boolean T_n
LabeledExamples prime_cycle_examples(int n);          // E+ = {C_p2..C_pn}, E- = {C_2}
LabeledExamples tree_lower_bound(int n);              // the L,R,A-tree family
LabeledExamples unit_examples(const std::string& name);

using Fixture = std::variant<PointedInstance, LabeledExamples>;
Fixture gen_fixture(const std::string& name);
std::vector<std::string> fixture_names();

} // namespace fitcq::oracle

#endif
