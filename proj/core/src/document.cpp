#include "fitcq/document.hpp"

#include <json.hpp>

namespace fitcq {
namespace {

using Json = nlohmann::ordered_json;

Json schema_to_json(const Schema& schema) {
    Json j = Json::object();
    for (const auto& [name, arity] : schema.relations) // std::map: sorted keys
        j[name] = arity;
    return j;
}

Json body_of(const PointedInstance& e) {
    Json facts = Json::array();
    for (const Fact& f : e.facts()) { // stored sorted
        Json row = Json::array();
        row.push_back(f.relation);
        for (const std::string& a : f.args) row.push_back(a);
        facts.push_back(row);
    }
    Json body = Json::object();
    body["facts"] = facts;
    body["distinguished"] = e.distinguished();
    return body;
}

Json doc_of(const PointedInstance& e, const char* kind) {
    Json j = Json::object();
    j["schema"] = schema_to_json(e.schema());
    j["kind"] = kind;
    j["body"] = body_of(e);
    return j;
}

Json doc_of(const UnionOfCqs& q) {
    Json j = Json::object();
    j["schema"] = schema_to_json(q.schema());
    j["kind"] = "ucq";
    Json disjuncts = Json::array();
    for (const ConjunctiveQuery& d : q.disjuncts) disjuncts.push_back(body_of(d.body));
    j["body"] = Json::object();
    j["body"]["disjuncts"] = disjuncts;
    return j;
}

Json doc_of(const LabeledExamples& e) {
    Json j = Json::object();
    j["schema"] = schema_to_json(e.schema);
    j["kind"] = "examples";
    Json body = Json::object();
    body["arity"] = e.arity;
    Json pos = Json::array(), neg = Json::array();
    for (const PointedInstance& p : e.positives) pos.push_back(body_of(p));
    for (const PointedInstance& n : e.negatives) neg.push_back(body_of(n));
    body["positives"] = pos;
    body["negatives"] = neg;
    j["body"] = body;
    return j;
}

std::string dump(const Json& j, bool pretty) {
    return pretty ? j.dump(2) : j.dump();
}

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw DocumentError(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

Schema schema_from_json(const Json& j) {
    Schema s;
    if (!j.is_object()) throw DocumentError("schema: expected an object of name -> arity");
    for (const auto& [name, arity] : j.items()) {
        if (!arity.is_number_integer())
            throw DocumentError("schema: arity of '" + name + "' must be an integer");
        s.relations[name] = arity.get<int>();
    }
    s.validate();
    return s;
}

PointedInstance instance_from_body(const Schema& schema, const Json& body,
                                   const char* what) {
    const Json& jfacts = field(body, "facts", what);
    if (!jfacts.is_array()) throw DocumentError(std::string(what) + ": 'facts' must be an array");
    std::vector<Fact> facts;
    for (const Json& row : jfacts) {
        if (!row.is_array() || row.empty())
            throw DocumentError(std::string(what) + ": each fact must be [relation, args...]");
        Fact f;
        f.relation = row.at(0).get<std::string>();
        for (size_t i = 1; i < row.size(); ++i) f.args.push_back(row.at(i).get<std::string>());
        facts.push_back(std::move(f));
    }
    const Json& jdist = field(body, "distinguished", what);
    if (!jdist.is_array())
        throw DocumentError(std::string(what) + ": 'distinguished' must be an array");
    std::vector<std::string> distinguished;
    for (const Json& d : jdist) distinguished.push_back(d.get<std::string>());
    return PointedInstance(schema, std::move(facts), std::move(distinguished));
}

Document document_from_json(const Json& j) {
    Schema schema = schema_from_json(field(j, "schema", "document"));
    std::string kind = field(j, "kind", "document").get<std::string>();
    const Json& body = field(j, "body", "document");
    if (kind == "instance") return instance_from_body(schema, body, "instance");
    if (kind == "cq") return ConjunctiveQuery{instance_from_body(schema, body, "cq")};
    if (kind == "ucq") {
        const Json& jd = field(body, "disjuncts", "ucq");
        if (!jd.is_array() || jd.empty())
            throw DocumentError("ucq: 'disjuncts' must be a nonempty array");
        std::vector<ConjunctiveQuery> qs;
        for (const Json& d : jd)
            qs.push_back(ConjunctiveQuery{instance_from_body(schema, d, "ucq disjunct")});
        return UnionOfCqs(std::move(qs));
    }
    if (kind == "examples") {
        LabeledExamples e;
        e.schema = schema;
        const Json& jpos = field(body, "positives", "examples");
        const Json& jneg = field(body, "negatives", "examples");
        for (const Json& p : jpos)
            e.positives.push_back(instance_from_body(schema, p, "positive example"));
        for (const Json& n : jneg)
            e.negatives.push_back(instance_from_body(schema, n, "negative example"));
        if (body.contains("arity")) {
            e.arity = body.at("arity").get<int>();
        } else if (!e.positives.empty()) {
            e.arity = e.positives.front().arity();
        } else if (!e.negatives.empty()) {
            e.arity = e.negatives.front().arity();
        } else {
            throw DocumentError("examples: empty collection needs an explicit 'arity'");
        }
        return e;
    }
    throw DocumentError("document: unknown kind '" + kind + "'");
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw DocumentError(std::string("malformed document: ") + err.what());
    }
}

} // namespace

std::string serialize(const PointedInstance& e, bool pretty) {
    return dump(doc_of(e, "instance"), pretty);
}
std::string serialize(const ConjunctiveQuery& q, bool pretty) {
    return dump(doc_of(q.body, "cq"), pretty);
}
std::string serialize(const UnionOfCqs& q, bool pretty) { return dump(doc_of(q), pretty); }
std::string serialize(const LabeledExamples& e, bool pretty) { return dump(doc_of(e), pretty); }

std::string serialize(const Document& doc, bool pretty) {
    return std::visit([&](const auto& d) { return serialize(d, pretty); }, doc);
}

std::string serialize_list(const std::vector<Document>& docs, bool pretty) {
    Json arr = Json::array();
    for (const Document& d : docs) arr.push_back(parse_json(serialize(d)));
    return dump(arr, pretty);
}

Document parse_document(const std::string& text) {
    return document_from_json(parse_json(text));
}

std::vector<Document> parse_document_list(const std::string& text) {
    Json j = parse_json(text);
    std::vector<Document> out;
    if (j.is_array()) {
        for (const Json& item : j) out.push_back(document_from_json(item));
    } else {
        out.push_back(document_from_json(j));
    }
    return out;
}

PointedInstance parse_instance(const std::string& text) {
    Document d = parse_document(text);
    if (auto* e = std::get_if<PointedInstance>(&d)) return *e;
    if (auto* q = std::get_if<ConjunctiveQuery>(&d)) return q->body;
    throw DocumentError("expected an instance document");
}

ConjunctiveQuery parse_cq(const std::string& text) {
    Document d = parse_document(text);
    if (auto* q = std::get_if<ConjunctiveQuery>(&d)) return *q;
    if (auto* e = std::get_if<PointedInstance>(&d)) return ConjunctiveQuery{*e};
    throw DocumentError("expected a cq document");
}

UnionOfCqs parse_ucq(const std::string& text) {
    Document d = parse_document(text);
    if (auto* q = std::get_if<UnionOfCqs>(&d)) return *q;
    if (auto* q = std::get_if<ConjunctiveQuery>(&d)) return UnionOfCqs({*q});
    throw DocumentError("expected a ucq document");
}

LabeledExamples parse_examples(const std::string& text) {
    Document d = parse_document(text);
    if (auto* e = std::get_if<LabeledExamples>(&d)) return *e;
    throw DocumentError("expected an examples document");
}

} // namespace fitcq
