#ifndef FITCQ_HOMCORE_HPP
#define FITCQ_HOMCORE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fitcq/model.hpp"

namespace fitcq {

/// A homomorphism witness: total on the source active domain plus the source
/// distinguished values, fact-preserving, positional on distinguished tuples.
struct Mapping {
    std::map<std::string, std::string> pairs;
};

std::optional<Mapping> find_homomorphism(const PointedInstance& src,
                                         const PointedInstance& dst,
                                         const Options& opts = default_options());

bool homomorphic(const PointedInstance& src, const PointedInstance& dst,
                 const Options& opts = default_options());

/// True iff every c-acyclic t with t -> src also satisfies t -> dst
/// (decided by arc consistency with distinguished values pinned positionally).
bool arc_consistent(const PointedInstance& src, const PointedInstance& dst,
                    const Options& opts = default_options());

PointedInstance compute_core(const PointedInstance& e,
                             const Options& opts = default_options());

PointedInstance direct_product(const PointedInstance& a, const PointedInstance& b,
                               const Options& opts = default_options());

/// n-ary product, left-associated; the empty product is the all-facts
/// singleton pointed at the constant tuple.
PointedInstance direct_product(const Schema& schema, int arity,
                               const std::vector<PointedInstance>& es,
                               const Options& opts = default_options());

PointedInstance disjoint_union(const PointedInstance& a, const PointedInstance& b,
                               const Options& opts = default_options());

bool hom_equivalent(const PointedInstance& a, const PointedInstance& b,
                    const Options& opts = default_options());

namespace detail {
class HomContext; // internal: shares one budget across nested searches
}

} // namespace fitcq

#endif
