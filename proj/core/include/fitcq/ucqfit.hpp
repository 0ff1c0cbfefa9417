#ifndef FITCQ_UCQFIT_HPP
#define FITCQ_UCQFIT_HPP

#include "fitcq/cqfit.hpp"
#include "fitcq/model.hpp"

namespace fitcq {

/// MostGeneral is a single notion here: the weak and strong variants
/// coincide for UCQs.
enum class UcqKind { Any, MostSpecific, MostGeneral, Unique };

/// UCQ-level homomorphism: q maps to q2 iff every disjunct of q2 receives
/// some disjunct of q; coincides with containment of q2 in q.
bool ucq_homomorphism(const UnionOfCqs& q, const UnionOfCqs& q2,
                      const Options& opts = default_options());

bool verify_fitting_ucq(const UnionOfCqs& q, const LabeledExamples& examples,
                        const Options& opts = default_options());

bool verify_extremal_ucq(UcqKind kind, const UnionOfCqs& q, const LabeledExamples& examples,
                         const Options& opts = default_options());

SearchOutcome construct_most_specific_ucq(const LabeledExamples& examples,
                                          const Options& opts = default_options());

SearchOutcome construct_most_general_ucq(const LabeledExamples& examples, int size_cap,
                                         const Options& opts = default_options());

} // namespace fitcq

#endif
