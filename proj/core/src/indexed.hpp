#ifndef FITCQ_INDEXED_HPP
#define FITCQ_INDEXED_HPP

#include <map>
#include <string>
#include <vector>

#include "fitcq/model.hpp"

namespace fitcq::detail {

// Integer-indexed view of a pointed instance. Values are the active domain
// plus any distinguished values outside it; relation ids come from the
// (shared) schema so two views over the same schema agree on them.
struct Indexed {
    struct IFact {
        int rel;
        std::vector<int> args;
    };

    std::vector<std::string> values;
    std::map<std::string, int> value_index;
    std::vector<std::string> rel_names;
    std::map<std::string, int> rel_index;
    std::vector<IFact> facts;
    std::vector<int> distinguished;
    std::vector<std::vector<std::pair<int, int>>> occurrences; // value -> (fact, pos)
    std::vector<std::vector<int>> facts_by_rel;                // rel -> fact ids

    explicit Indexed(const PointedInstance& e) {
        for (const auto& [name, arity] : e.schema().relations) {
            rel_index[name] = static_cast<int>(rel_names.size());
            rel_names.push_back(name);
        }
        auto intern = [&](const std::string& v) {
            auto it = value_index.find(v);
            if (it != value_index.end()) return it->second;
            int id = static_cast<int>(values.size());
            value_index[v] = id;
            values.push_back(v);
            return id;
        };
        for (const std::string& v : e.active_domain()) intern(v);
        facts_by_rel.resize(rel_names.size());
        for (const Fact& f : e.facts()) {
            IFact g;
            g.rel = rel_index.at(f.relation);
            for (const std::string& a : f.args) g.args.push_back(intern(a));
            facts_by_rel[g.rel].push_back(static_cast<int>(facts.size()));
            facts.push_back(std::move(g));
        }
        for (const std::string& d : e.distinguished()) distinguished.push_back(intern(d));
        occurrences.resize(values.size());
        for (size_t fi = 0; fi < facts.size(); ++fi)
            for (size_t p = 0; p < facts[fi].args.size(); ++p)
                occurrences[facts[fi].args[p]].push_back({static_cast<int>(fi),
                                                          static_cast<int>(p)});
    }

    int n() const { return static_cast<int>(values.size()); }
    int degree(int v) const { return static_cast<int>(occurrences[v].size()); }
};

} // namespace fitcq::detail

#endif
