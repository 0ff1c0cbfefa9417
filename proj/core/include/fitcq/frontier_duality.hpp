#ifndef FITCQ_FRONTIER_DUALITY_HPP
#define FITCQ_FRONTIER_DUALITY_HPP

#include <vector>

#include "fitcq/homcore.hpp"
#include "fitcq/model.hpp"

namespace fitcq {

/// A frontier: finite complete set of minimal weakenings of a query. Members
/// may be unsafe (an answer variable occurring in no conjunct); downstream
/// homomorphism checks treat such a variable as an unconstrained value that
/// still maps positionally.
struct Frontier {
    std::vector<ConjunctiveQuery> members;
};

struct DualitySide {
    std::vector<PointedInstance> examples; // uniform schema/arity
};

/// True iff every cycle of the incidence multigraph passes through a
/// distinguished value. Self-loops and parallel-edge 2-cycles count.
bool is_c_acyclic(const PointedInstance& e);

/// Frontier of the core of q w.r.t. all CQs (the replica construction, with
/// the equality-type quotient for repeated answer variables). Throws
/// FrontierNotExistsError when the core is not c-acyclic.
Frontier frontier(const ConjunctiveQuery& q, const Options& opts = default_options());

/// A set D with ({e}, D) a homomorphism duality; requires e c-acyclic.
DualitySide single_obstruction_dual(const PointedInstance& e,
                                    const Options& opts = default_options());

/// Decides whether (f, d) is a homomorphism duality.
bool check_hom_duality(const DualitySide& f, const DualitySide& d,
                       const Options& opts = default_options());

/// The dismantlability test behind relativized duality existence: marker
/// relations are added to p and e, the core I of their product is taken, and
/// the P-diagonal of I^2 must dismantle to the diagonal.
bool dismantle_check(const PointedInstance& p, const PointedInstance& e,
                     const Options& opts = default_options());

/// True iff some finite F makes (F, d) a homomorphism duality relative to p.
bool relativized_duality_exists(const DualitySide& d, const PointedInstance& p,
                                const Options& opts = default_options());

/// Constructs such an F from pointed instances with at most size_cap values,
/// minimized; validated against brute-force enumeration up to
/// opts.duality_check_bound (CapTooSmallError when validation fails).
DualitySide relativized_duality_construct(const DualitySide& d, const PointedInstance& p,
                                          int size_cap,
                                          const Options& opts = default_options());

} // namespace fitcq

#endif
