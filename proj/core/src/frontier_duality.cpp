#include "fitcq/frontier_duality.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "fitcq/oracle.hpp"
#include "indexed.hpp"

namespace fitcq {
namespace {

using detail::Indexed;

// ---------------------------------------------------------------------------
// c-acyclicity

// Multigraph acyclicity of the incidence graph restricted to
// non-distinguished values: a value occurring twice in one fact closes a
// 2-cycle, and otherwise union-find detects cycles.
bool incidence_forest(const PointedInstance& e, const std::set<std::string>& excluded) {
    std::map<std::string, int> valueNode;
    auto node_of = [&](const std::string& v) {
        auto [it, fresh] = valueNode.try_emplace(v, static_cast<int>(valueNode.size()));
        return it->second;
    };
    for (const Fact& f : e.facts())
        for (const std::string& a : f.args)
            if (!excluded.count(a)) node_of(a);

    std::vector<int> parent(valueNode.size() + e.facts().size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int factBase = static_cast<int>(valueNode.size());
    for (size_t fi = 0; fi < e.facts().size(); ++fi) {
        std::set<std::string> seenHere;
        for (const std::string& a : e.facts()[fi].args) {
            if (excluded.count(a)) continue;
            if (!seenHere.insert(a).second) return false; // parallel edges
            int u = find(valueNode.at(a));
            int w = find(factBase + static_cast<int>(fi));
            if (u == w) return false;
            parent[u] = w;
        }
    }
    return true;
}

} // namespace

bool is_c_acyclic(const PointedInstance& e) {
    std::set<std::string> distinguished(e.distinguished().begin(), e.distinguished().end());
    return incidence_forest(e, distinguished);
}

// ---------------------------------------------------------------------------
// Frontier construction

namespace {

struct FreshNames {
    std::set<std::string> taken;
    int counter = 0;

    explicit FreshNames(const PointedInstance& e) {
        for (const std::string& v : e.active_domain()) taken.insert(v);
        for (const std::string& v : e.distinguished()) taken.insert(v);
    }
    std::string next() {
        std::string name;
        do name = "u" + std::to_string(counter++);
        while (taken.count(name));
        taken.insert(name);
        return name;
    }
};

// fg-connected components: facts adjacent when they share a non-distinguished
// value. Returns one vector of fact indices per component.
std::vector<std::vector<int>> fg_components(const PointedInstance& e) {
    const auto& facts = e.facts();
    std::set<std::string> distinguished(e.distinguished().begin(), e.distinguished().end());
    std::vector<int> parent(facts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<std::string, int> firstFact;
    for (size_t i = 0; i < facts.size(); ++i)
        for (const std::string& a : facts[i].args) {
            if (distinguished.count(a)) continue;
            auto [it, fresh] = firstFact.try_emplace(a, static_cast<int>(i));
            if (!fresh) parent[find(static_cast<int>(i))] = find(it->second);
        }
    std::map<int, std::vector<int>> byRoot;
    for (size_t i = 0; i < facts.size(); ++i)
        byRoot[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : byRoot) out.push_back(std::move(members));
    return out;
}

// The replica construction applied to one fg-connected component: facts of
// the component are replaced by all acceptable instances, every other fact is
// kept verbatim.
ConjunctiveQuery frontier_member_for_component(const PointedInstance& core,
                                               const std::vector<int>& component,
                                               Budget& budget) {
    std::set<std::string> distinguished(core.distinguished().begin(),
                                        core.distinguished().end());
    std::set<int> inComponent(component.begin(), component.end());
    FreshNames fresh(core);

    // Replica names: one per (existential value, containing fact) and one per
    // answer variable occurring in the component.
    std::map<std::pair<std::string, int>, std::string> existentialReplica;
    std::map<std::string, std::string> answerReplica;
    for (int fi : component) {
        const Fact& f = core.facts()[fi];
        for (const std::string& a : f.args) {
            if (distinguished.count(a)) {
                if (!answerReplica.count(a)) answerReplica[a] = fresh.next();
            } else {
                auto key = std::make_pair(a, fi);
                if (!existentialReplica.count(key)) existentialReplica[key] = fresh.next();
            }
        }
    }
    // Facts (within the component) containing each existential value.
    std::map<std::string, std::vector<int>> containing;
    for (int fi : component)
        for (const std::string& a : core.facts()[fi].args)
            if (!distinguished.count(a)) {
                auto& v = containing[a];
                if (v.empty() || v.back() != fi) v.push_back(fi);
            }

    std::vector<Fact> outFacts;
    for (size_t fi = 0; fi < core.facts().size(); ++fi)
        if (!inComponent.count(static_cast<int>(fi))) outFacts.push_back(core.facts()[fi]);

    for (int fi : component) {
        const Fact& f = core.facts()[fi];
        int n = static_cast<int>(f.args.size());
        // Per position: candidate replicas, each flagged with whether using it
        // makes the instance acceptable.
        std::vector<std::vector<std::pair<std::string, bool>>> choices(n);
        for (int p = 0; p < n; ++p) {
            const std::string& z = f.args[p];
            if (distinguished.count(z)) {
                choices[p].push_back({z, false});
                choices[p].push_back({answerReplica.at(z), true});
            } else {
                for (int fj : containing.at(z))
                    choices[p].push_back({existentialReplica.at({z, fj}), fj != fi});
            }
        }
        std::vector<int> pick(n, 0);
        while (true) {
            budget.tick();
            bool acceptable = false;
            for (int p = 0; p < n; ++p) acceptable |= choices[p][pick[p]].second;
            if (acceptable) {
                Fact g{f.relation, {}};
                for (int p = 0; p < n; ++p) g.args.push_back(choices[p][pick[p]].first);
                outFacts.push_back(std::move(g));
            }
            int pos = n - 1;
            while (pos >= 0 && pick[pos] + 1 == (int)choices[pos].size()) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
    }
    return ConjunctiveQuery{
        PointedInstance(core.schema(), std::move(outFacts), core.distinguished())};
}

std::vector<ConjunctiveQuery> frontier_of_core(const PointedInstance& core, Budget& budget);

// Equality types are partitions of answer positions induced by repeated
// distinguished values.
std::vector<ConjunctiveQuery> frontier_non_unp(const PointedInstance& core, Budget& budget) {
    int k = core.arity();
    std::map<std::string, std::vector<int>> classes; // value -> positions
    for (int i = 0; i < k; ++i) classes[core.distinguished()[i]].push_back(i);

    std::vector<ConjunctiveQuery> members;

    // Case 1: quotient to one position per class, recurse, re-add repeats.
    std::vector<std::string> reduced;
    std::map<std::string, int> classIndex;
    for (int i = 0; i < k; ++i) {
        const std::string& v = core.distinguished()[i];
        if (!classIndex.count(v)) {
            classIndex[v] = static_cast<int>(reduced.size());
            reduced.push_back(v);
        }
    }
    PointedInstance quotient(core.schema(), core.facts(), reduced);
    for (const ConjunctiveQuery& m : frontier_of_core(quotient, budget)) {
        std::vector<std::string> lifted(k);
        for (int i = 0; i < k; ++i)
            lifted[i] = m.body.distinguished()[classIndex.at(core.distinguished()[i])];
        members.push_back(
            ConjunctiveQuery{PointedInstance(core.schema(), m.body.facts(), lifted)});
    }

    // Case 2: one member per minimal weakening of the equality type (one
    // class split in two). Dropping the equality from the saturated form:
    // every occurrence of the class variable is replaced independently by
    // either the kept variable or the split-off one.
    for (const auto& [value, positions] : classes) {
        if (positions.size() < 2) continue;
        int m = static_cast<int>(positions.size());
        // Subsets not containing the first position, nonempty: each is the
        // "broken away" part of an unordered split.
        for (int sub = 1; sub < (1 << (m - 1)); ++sub) {
            FreshNames fresh(core);
            std::string u = fresh.next();
            std::vector<std::string> dist = core.distinguished();
            for (int bit = 0; bit < m - 1; ++bit)
                if (sub & (1 << bit)) dist[positions[bit + 1]] = u;

            std::vector<Fact> inflated;
            for (const Fact& f : core.facts()) {
                std::vector<int> slots;
                for (size_t i = 0; i < f.args.size(); ++i)
                    if (f.args[i] == value) slots.push_back(static_cast<int>(i));
                for (int pattern = 0; pattern < (1 << slots.size()); ++pattern) {
                    Fact g = f;
                    for (size_t b = 0; b < slots.size(); ++b)
                        if (pattern & (1 << b)) g.args[slots[b]] = u;
                    inflated.push_back(std::move(g));
                }
            }
            members.push_back(ConjunctiveQuery{
                PointedInstance(core.schema(), std::move(inflated), dist)});
        }
    }
    return members;
}

std::vector<ConjunctiveQuery> frontier_of_core(const PointedInstance& core, Budget& budget) {
    if (!PointedInstance(core).has_unp()) return frontier_non_unp(core, budget);
    std::vector<ConjunctiveQuery> members;
    for (const auto& component : fg_components(core))
        members.push_back(frontier_member_for_component(core, component, budget));
    return members;
}

} // namespace

Frontier frontier(const ConjunctiveQuery& q, const Options& opts) {
    Budget budget(opts.budget);
    PointedInstance core = compute_core(q.body, opts);
    if (!is_c_acyclic(core))
        throw FrontierNotExistsError("no frontier: the core of the query is not c-acyclic");
    return Frontier{frontier_of_core(core, budget)};
}

// ---------------------------------------------------------------------------
// Duals of single c-acyclic instances

namespace {

std::string marker_prefix(const Schema& schema) {
    std::string prefix = "@";
    bool clash = true;
    while (clash) {
        clash = false;
        for (const auto& [name, arity] : schema.relations)
            if (name.rfind(prefix, 0) == 0) { clash = true; break; }
        if (clash) prefix += "@";
    }
    return prefix;
}

// Folds dominated values until none is left (skipping protected ones).
// Folding the lexicographically least dominated value first keeps the result
// deterministic; the reachable endpoint is unique up to isomorphism.
PointedInstance fold_dominated(const PointedInstance& e,
                               const std::set<std::string>& protectedValues,
                               Budget& budget) {
    PointedInstance current = e;
    while (true) {
        auto adom = current.active_domain();
        std::map<std::string, std::vector<const Fact*>> factsWith;
        for (const Fact& f : current.facts())
            for (const std::string& a : std::set<std::string>(f.args.begin(), f.args.end()))
                factsWith[a].push_back(&f);

        std::string fold;
        for (const std::string& u : adom) {
            if (protectedValues.count(u)) continue;
            bool dominated = false;
            for (const std::string& w : adom) {
                if (w == u) continue;
                budget.tick();
                bool ok = true;
                for (const Fact* f : factsWith[u]) {
                    for (size_t i = 0; i < f->args.size() && ok; ++i) {
                        if (f->args[i] != u) continue;
                        Fact g = *f;
                        g.args[i] = w;
                        if (!std::binary_search(current.facts().begin(),
                                                current.facts().end(), g))
                            ok = false;
                    }
                    if (!ok) break;
                }
                if (ok) { dominated = true; break; }
            }
            if (dominated) { fold = u; break; }
        }
        if (fold.empty()) return current;
        std::vector<Fact> remaining;
        for (const Fact& f : current.facts())
            if (std::find(f.args.begin(), f.args.end(), fold) == f.args.end())
                remaining.push_back(f);
        current = PointedInstance(current.schema(), std::move(remaining),
                                  current.distinguished());
    }
}

// One tree component of the instance split at its distinguished values:
// every occurrence of a distinguished value becomes a fresh port leaf that
// carries position-marker unary facts.
struct SplitComponent {
    std::vector<Fact> facts; // over the extended schema
};

std::vector<SplitComponent> split_at_distinguished(const PointedInstance& e,
                                                   const Schema& extended,
                                                   const std::string& prefix) {
    std::set<std::string> distinguished(e.distinguished().begin(), e.distinguished().end());
    std::map<std::string, std::vector<int>> positionsOf;
    for (int i = 0; i < e.arity(); ++i) positionsOf[e.distinguished()[i]].push_back(i);

    const auto& facts = e.facts();
    std::vector<int> parent(facts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<std::string, int> firstFact;
    for (size_t i = 0; i < facts.size(); ++i)
        for (const std::string& a : facts[i].args) {
            if (distinguished.count(a)) continue;
            auto [it, fresh] = firstFact.try_emplace(a, static_cast<int>(i));
            if (!fresh) parent[find(static_cast<int>(i))] = find(it->second);
        }

    std::map<int, SplitComponent> byRoot;
    for (size_t fi = 0; fi < facts.size(); ++fi) {
        SplitComponent& comp = byRoot[find(static_cast<int>(fi))];
        Fact g{facts[fi].relation, {}};
        for (size_t p = 0; p < facts[fi].args.size(); ++p) {
            const std::string& a = facts[fi].args[p];
            if (!distinguished.count(a)) {
                g.args.push_back(a);
                continue;
            }
            std::string port =
                prefix + "port:" + std::to_string(fi) + ":" + std::to_string(p);
            g.args.push_back(port);
            for (int i : positionsOf.at(a))
                comp.facts.push_back({prefix + "ans" + std::to_string(i), {port}});
        }
        comp.facts.push_back(std::move(g));
    }
    std::vector<SplitComponent> out;
    for (auto& [root, comp] : byRoot) out.push_back(std::move(comp));
    (void)extended;
    return out;
}

// The dual of one incidence-tree component, over the extended schema.
// Elements are the sets of pieces (value, incident fact) that miss at least
// one piece at every value; a relation tuple is a fact when, for every
// component fact and argument position, satisfaction of all sibling pieces
// forces the piece at that position.
PointedInstance component_dual(const Schema& extended, const SplitComponent& comp,
                               Budget& budget) {
    std::vector<Fact> cfacts = comp.facts;
    std::sort(cfacts.begin(), cfacts.end());
    cfacts.erase(std::unique(cfacts.begin(), cfacts.end()), cfacts.end());

    std::vector<std::pair<std::string, int>> pieces; // (value, fact index)
    std::map<std::pair<std::string, int>, int> pieceIndex;
    std::map<std::string, std::vector<int>> piecesAt; // value -> piece ids
    for (size_t fi = 0; fi < cfacts.size(); ++fi)
        for (const std::string& a : cfacts[fi].args) {
            auto key = std::make_pair(a, static_cast<int>(fi));
            if (pieceIndex.count(key)) continue;
            pieceIndex[key] = static_cast<int>(pieces.size());
            piecesAt[a].push_back(static_cast<int>(pieces.size()));
            pieces.push_back(key);
        }
    int np = static_cast<int>(pieces.size());
    if (np > 20) throw BudgetExceededError("obstruction dual too large (" +
                                           std::to_string(np) + " pieces)");
    budget.tick(std::uint64_t{1} << np);

    std::vector<std::uint32_t> universe;
    for (std::uint32_t sigma = 0; sigma < (1u << np); ++sigma) {
        bool ok = true;
        for (const auto& [value, ids] : piecesAt) {
            bool missesOne = false;
            for (int id : ids)
                if (!(sigma & (1u << id))) { missesOne = true; break; }
            if (!missesOne) { ok = false; break; }
        }
        if (ok) universe.push_back(sigma);
    }

    auto element_name = [&](std::uint32_t sigma) { return "s" + std::to_string(sigma); };

    std::vector<Fact> dualFacts;
    for (const auto& [rel, arity] : extended.relations) {
        std::vector<size_t> factOfRel;
        for (size_t fi = 0; fi < cfacts.size(); ++fi)
            if (cfacts[fi].relation == rel) factOfRel.push_back(fi);

        std::vector<int> pick(arity, 0);
        while (true) {
            budget.tick();
            bool include = true;
            for (size_t fi : factOfRel) {
                const auto& args = cfacts[fi].args;
                for (int j = 0; j < arity && include; ++j) {
                    bool siblingsSatisfied = true;
                    for (int l = 0; l < arity && siblingsSatisfied; ++l) {
                        if (l == j) continue;
                        for (int id : piecesAt.at(args[l])) {
                            if (pieces[id].second == (int)fi) continue;
                            if (!(universe[pick[l]] & (1u << id))) {
                                siblingsSatisfied = false;
                                break;
                            }
                        }
                    }
                    if (siblingsSatisfied) {
                        int id = pieceIndex.at({args[j], (int)fi});
                        if (!(universe[pick[j]] & (1u << id))) include = false;
                    }
                }
                if (!include) break;
            }
            if (include) {
                Fact g{rel, {}};
                for (int j = 0; j < arity; ++j) g.args.push_back(element_name(universe[pick[j]]));
                dualFacts.push_back(std::move(g));
            }
            int pos = arity - 1;
            while (pos >= 0 && pick[pos] + 1 == (int)universe.size()) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
    }
    return PointedInstance(extended, std::move(dualFacts), {});
}

void prune_hom_maximal(std::vector<PointedInstance>& side, const Options& opts) {
    // Deduplicate by hom-equivalence, then drop members mapping into others.
    std::vector<PointedInstance> kept;
    for (const PointedInstance& e : side) {
        bool dup = false;
        for (const PointedInstance& k : kept)
            if (hom_equivalent(e, k, opts)) { dup = true; break; }
        if (!dup) kept.push_back(e);
    }
    std::vector<PointedInstance> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < kept.size() && !dominated; ++j)
            if (i != j && homomorphic(kept[i], kept[j], opts)) dominated = true;
        if (!dominated) out.push_back(kept[i]);
    }
    side = std::move(out);
}

void prune_hom_minimal(std::vector<PointedInstance>& side, const Options& opts) {
    std::vector<PointedInstance> kept;
    for (const PointedInstance& e : side) {
        bool dup = false;
        for (const PointedInstance& k : kept)
            if (hom_equivalent(e, k, opts)) { dup = true; break; }
        if (!dup) kept.push_back(e);
    }
    std::vector<PointedInstance> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < kept.size() && !dominated; ++j)
            if (i != j && homomorphic(kept[j], kept[i], opts)) dominated = true;
        if (!dominated) out.push_back(kept[i]);
    }
    side = std::move(out);
}

} // namespace

DualitySide single_obstruction_dual(const PointedInstance& e, const Options& opts) {
    if (!is_c_acyclic(e)) throw NotCAcyclicError("obstruction duals need a c-acyclic input");
    Budget budget(opts.budget);
    PointedInstance core = compute_core(e, opts);
    int k = core.arity();

    std::string prefix = marker_prefix(core.schema());
    Schema extended = core.schema();
    for (int i = 0; i < k; ++i) extended.relations[prefix + "ans" + std::to_string(i)] = 1;

    std::vector<PointedInstance> members;

    for (const SplitComponent& comp : split_at_distinguished(core, extended, prefix)) {
        PointedInstance dual = component_dual(extended, comp, budget);
        dual = fold_dominated(dual, {}, budget);
        dual = compute_core(dual, opts);

        // Re-point: each choice of marker-labelled elements for the answer
        // positions gives one member over the original schema.
        std::vector<std::vector<std::string>> candidates(k);
        for (const Fact& f : dual.facts())
            for (int i = 0; i < k; ++i)
                if (f.relation == prefix + "ans" + std::to_string(i))
                    candidates[i].push_back(f.args[0]);
        bool feasible = true;
        for (int i = 0; i < k; ++i) {
            std::sort(candidates[i].begin(), candidates[i].end());
            candidates[i].erase(std::unique(candidates[i].begin(), candidates[i].end()),
                                candidates[i].end());
            if (candidates[i].empty()) feasible = false;
        }
        if (!feasible) continue; // component admits no valid answer image at all

        std::vector<Fact> plainFacts;
        for (const Fact& f : dual.facts())
            if (core.schema().relations.count(f.relation)) plainFacts.push_back(f);

        std::vector<int> pick(k, 0);
        while (true) {
            std::vector<std::string> dist;
            for (int i = 0; i < k; ++i) dist.push_back(candidates[i][pick[i]]);
            members.push_back(PointedInstance(core.schema(), plainFacts, dist));
            int pos = k - 1;
            while (pos >= 0 && pick[pos] + 1 == (int)candidates[pos].size()) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
    }

    // Ties between answer positions sharing a value outside the active
    // domain are not seen by any component; cover them with two-element
    // all-facts gadgets forcing the tied positions apart.
    auto adom = core.active_domain();
    std::map<std::string, std::vector<int>> tiedOutside;
    for (int i = 0; i < k; ++i) {
        const std::string& v = core.distinguished()[i];
        if (!std::binary_search(adom.begin(), adom.end(), v)) tiedOutside[v].push_back(i);
    }
    for (const auto& [value, positions] : tiedOutside) {
        if (positions.size() < 2) continue;
        std::vector<Fact> full;
        for (const auto& [rel, arity] : core.schema().relations) {
            std::vector<int> idx(arity, 0);
            while (true) {
                Fact f{rel, {}};
                for (int i : idx) f.args.push_back(i == 0 ? "g0" : "g1");
                full.push_back(f);
                int pos = arity - 1;
                while (pos >= 0 && idx[pos] == 1) idx[pos--] = 0;
                if (pos < 0) break;
                ++idx[pos];
            }
        }
        int i = positions[0], j = positions[1];
        for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
            if ((bits >> i) & 1) continue;
            if (!((bits >> j) & 1)) continue;
            std::vector<std::string> dist;
            for (int p = 0; p < k; ++p) dist.push_back(((bits >> p) & 1) ? "g1" : "g0");
            members.push_back(PointedInstance(core.schema(), full, dist));
        }
    }

    prune_hom_maximal(members, opts);
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(a.facts().size(), a.facts(), a.distinguished()) <
               std::make_tuple(b.facts().size(), b.facts(), b.distinguished());
    });
    return DualitySide{members};
}

// ---------------------------------------------------------------------------
// HomDual

namespace {

std::vector<PointedInstance> normalized_cores(const std::vector<PointedInstance>& side,
                                              const Options& opts) {
    std::vector<PointedInstance> out;
    for (const PointedInstance& e : side) out.push_back(compute_core(e, opts));
    return out;
}

} // namespace

bool check_hom_duality(const DualitySide& f, const DualitySide& d, const Options& opts) {
    const PointedInstance* sample = nullptr;
    if (!f.examples.empty()) sample = &f.examples.front();
    if (!d.examples.empty()) sample = &d.examples.front();
    if (!sample) throw InvalidParameterError("check_hom_duality: both sides empty");
    for (const PointedInstance& e : f.examples) require_same_shape(e, *sample);
    for (const PointedInstance& e : d.examples) require_same_shape(e, *sample);
    const Schema& schema = sample->schema();
    int arity = sample->arity();

    std::vector<PointedInstance> fs = normalized_cores(f.examples, opts);
    prune_hom_minimal(fs, opts);
    std::vector<PointedInstance> ds = normalized_cores(d.examples, opts);
    prune_hom_maximal(ds, opts);

    for (const PointedInstance& e : fs)
        if (!is_c_acyclic(e)) return false;

    // (i) no F-member maps into a D-member
    for (const PointedInstance& ef : fs)
        for (const PointedInstance& ed : ds)
            if (homomorphic(ef, ed, opts)) return false;

    // A duality with right-hand side D exists at all iff every member passes
    // the dismantlability test against the all-facts singleton.
    PointedInstance top = all_facts_singleton(schema, arity);
    for (const PointedInstance& ed : ds)
        if (!dismantle_check(top, ed, opts)) return false;

    // (ii) every product of per-member duals maps into some member of D;
    // arc consistency decides those homomorphisms exactly here.
    std::vector<DualitySide> duals;
    for (const PointedInstance& ef : fs) duals.push_back(single_obstruction_dual(ef, opts));

    std::vector<int> pick(duals.size(), 0);
    while (true) {
        std::vector<PointedInstance> factors;
        for (size_t i = 0; i < duals.size(); ++i)
            factors.push_back(duals[i].examples[pick[i]]);
        PointedInstance candidate = direct_product(schema, arity, factors, opts);
        bool covered = false;
        for (const PointedInstance& ed : ds)
            if (arc_consistent(candidate, ed, opts)) { covered = true; break; }
        if (!covered) return false;

        int pos = static_cast<int>(duals.size()) - 1;
        while (pos >= 0 && pick[pos] + 1 == (int)duals[pos].examples.size()) pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    return true;
}

// ---------------------------------------------------------------------------
// Dismantlability and relativized dualities

namespace {

// Product that remembers, for every product value, its two factor values.
struct TrackedProduct {
    PointedInstance instance;
    std::map<std::string, std::pair<std::string, std::string>> parts;
};

TrackedProduct tracked_product(const PointedInstance& a, const PointedInstance& b,
                               const Options& opts) {
    TrackedProduct out{direct_product(a, b, opts), {}};
    auto record = [&](const std::string& x, const std::string& y) {
        out.parts.emplace("(" + x + "," + y + ")", std::make_pair(x, y));
    };
    std::map<std::string, std::vector<const Fact*>> bByRel;
    for (const Fact& g : b.facts()) bByRel[g.relation].push_back(&g);
    for (const Fact& f : a.facts()) {
        auto it = bByRel.find(f.relation);
        if (it == bByRel.end()) continue;
        for (const Fact* g : it->second)
            for (size_t i = 0; i < f.args.size(); ++i) record(f.args[i], g->args[i]);
    }
    for (int i = 0; i < a.arity(); ++i) record(a.distinguished()[i], b.distinguished()[i]);
    return out;
}

} // namespace

bool dismantle_check(const PointedInstance& p, const PointedInstance& e,
                     const Options& opts) {
    require_same_shape(p, e);
    Budget budget(opts.budget);

    std::string prefix = marker_prefix(p.schema());
    Schema extended = p.schema();
    auto padom = p.active_domain();
    for (const std::string& v : padom) extended.relations[prefix + v] = 1;

    std::vector<Fact> pbar = p.facts();
    for (const std::string& v : padom) pbar.push_back({prefix + v, {v}});
    std::vector<Fact> ebar = e.facts();
    for (const std::string& v : padom)
        for (const std::string& w : e.active_domain()) ebar.push_back({prefix + v, {w}});

    PointedInstance pb(extended, std::move(pbar), p.distinguished());
    PointedInstance eb(extended, std::move(ebar), e.distinguished());

    TrackedProduct base = tracked_product(pb, eb, opts);
    PointedInstance core = compute_core(base.instance, opts);

    TrackedProduct squared = tracked_product(core, core, opts);

    std::map<std::string, std::string> pPart; // core value -> p-side factor
    for (const std::string& v : core.active_domain()) pPart[v] = base.parts.at(v).first;
    for (const std::string& d : core.distinguished())
        if (!pPart.count(d)) pPart[d] = base.parts.at(d).first;

    std::set<std::string> keep;     // P-diagonal values of core^2
    std::set<std::string> diagonal; // fully diagonal values
    for (const auto& [name, ab] : squared.parts) {
        if (pPart.at(ab.first) == pPart.at(ab.second)) keep.insert(name);
        if (ab.first == ab.second) diagonal.insert(name);
    }
    std::vector<Fact> diagFacts;
    for (const Fact& f : squared.instance.facts()) {
        bool all = true;
        for (const std::string& a : f.args)
            if (!keep.count(a)) { all = false; break; }
        if (all) diagFacts.push_back(f);
    }
    PointedInstance diagP(extended, std::move(diagFacts), squared.instance.distinguished());

    PointedInstance folded = fold_dominated(diagP, diagonal, budget);
    for (const std::string& v : folded.active_domain())
        if (!diagonal.count(v)) return false;
    return true;
}

namespace {

std::vector<PointedInstance> non_subsumed(const std::vector<PointedInstance>& d,
                                          const PointedInstance& p, const Options& opts) {
    // Deduplicate by hom-equivalence first so equivalent copies do not shield
    // each other from subsumption.
    std::vector<PointedInstance> unique;
    for (const PointedInstance& e : d) {
        bool dup = false;
        for (const PointedInstance& u : unique)
            if (hom_equivalent(e, u, opts)) { dup = true; break; }
        if (!dup) unique.push_back(e);
    }
    std::vector<PointedInstance> out;
    for (const PointedInstance& e : unique) {
        PointedInstance pe = direct_product(p, e, opts);
        bool subsumed = false;
        for (const PointedInstance& other : unique) {
            if (&other == &e) continue;
            if (!homomorphic(pe, other, opts)) continue;
            PointedInstance po = direct_product(p, other, opts);
            if (!homomorphic(po, e, opts)) { subsumed = true; break; }
        }
        if (!subsumed) out.push_back(e);
    }
    return out;
}

} // namespace

bool relativized_duality_exists(const DualitySide& d, const PointedInstance& p,
                                const Options& opts) {
    if (d.examples.empty())
        throw InvalidParameterError("relativized duality needs a nonempty right-hand side");
    for (const PointedInstance& e : d.examples) require_same_shape(e, p);
    for (const PointedInstance& e : non_subsumed(d.examples, p, opts))
        if (!dismantle_check(p, e, opts)) return false;
    return true;
}

DualitySide relativized_duality_construct(const DualitySide& d, const PointedInstance& p,
                                          int size_cap, const Options& opts) {
    if (size_cap < 1) throw InvalidParameterError("size_cap must be >= 1");
    if (!relativized_duality_exists(d, p, opts))
        throw InvalidParameterError("no relativized duality exists for this input");
    const Schema& schema = p.schema();
    int arity = p.arity();

    std::vector<PointedInstance> keyExamples = non_subsumed(d.examples, p, opts);

    // Per key example: the small obstructions, pruned to hom-minimal ones.
    std::vector<std::vector<PointedInstance>> perExample;
    for (const PointedInstance& e : keyExamples) {
        std::vector<PointedInstance> fe;
        oracle::enumerate_instances(schema, arity, size_cap, [&](const PointedInstance& t) {
            if (homomorphic(t, e, opts)) return true;
            if (!homomorphic(t, p, opts)) return true; // can never fire below p
            fe.push_back(t);
            return true;
        });
        prune_hom_minimal(fe, opts);
        perExample.push_back(std::move(fe));
    }

    std::vector<PointedInstance> members;
    bool anyEmpty = false;
    for (const auto& fe : perExample)
        if (fe.empty()) anyEmpty = true;
    if (!anyEmpty && !perExample.empty()) {
        std::vector<int> pick(perExample.size(), 0);
        while (true) {
            PointedInstance member = perExample[0][pick[0]];
            for (size_t i = 1; i < perExample.size(); ++i)
                member = disjoint_union(member, perExample[i][pick[i]], opts);
            members.push_back(std::move(member));
            int pos = static_cast<int>(perExample.size()) - 1;
            while (pos >= 0 && pick[pos] + 1 == (int)perExample[pos].size()) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
    }
    prune_hom_minimal(members, opts);
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(a.facts().size(), a.facts(), a.distinguished()) <
               std::make_tuple(b.facts().size(), b.facts(), b.distinguished());
    });

    DualitySide result{members};
    if (!oracle::brute_check_duality(result, d, opts.duality_check_bound, p, opts))
        throw CapTooSmallError("constructed set fails duality validation; raise the size cap");
    return result;
}

} // namespace fitcq
