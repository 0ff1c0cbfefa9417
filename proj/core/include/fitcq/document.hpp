#ifndef FITCQ_DOCUMENT_HPP
#define FITCQ_DOCUMENT_HPP

#include <string>
#include <variant>
#include <vector>

#include "fitcq/model.hpp"

namespace fitcq {

/// The textual exchange format used by the CLI. A document is a JSON object
/// with fixed field order: "schema" (name -> arity), "kind" ("instance",
/// "cq", "ucq" or "examples") and "body". Instance and CQ bodies hold
/// "facts" (sorted lexicographically) and "distinguished"; UCQ bodies hold
/// "disjuncts"; examples bodies hold "arity", "positives" and "negatives".
using Document =
    std::variant<PointedInstance, ConjunctiveQuery, UnionOfCqs, LabeledExamples>;

std::string serialize(const PointedInstance& e, bool pretty = false);
std::string serialize(const ConjunctiveQuery& q, bool pretty = false);
std::string serialize(const UnionOfCqs& q, bool pretty = false);
std::string serialize(const LabeledExamples& e, bool pretty = false);
std::string serialize(const Document& doc, bool pretty = false);

/// Serializes a list of documents as a JSON array (used for frontiers,
/// duality sides and bases).
std::string serialize_list(const std::vector<Document>& docs, bool pretty = false);

Document parse_document(const std::string& text);
std::vector<Document> parse_document_list(const std::string& text);

PointedInstance parse_instance(const std::string& text);
ConjunctiveQuery parse_cq(const std::string& text);
UnionOfCqs parse_ucq(const std::string& text);
LabeledExamples parse_examples(const std::string& text);

} // namespace fitcq

#endif
