#include "fitcq/homcore.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "indexed.hpp"

namespace fitcq {
namespace {

using detail::Indexed;

// Target-side index: (rel, position, value) -> fact ids, for support lookups.
struct TargetIndex {
    const Indexed& inst;
    std::vector<std::vector<std::vector<std::vector<int>>>> by_rel_pos_val;

    explicit TargetIndex(const Indexed& dst) : inst(dst) {
        by_rel_pos_val.resize(dst.rel_names.size());
        for (size_t r = 0; r < dst.rel_names.size(); ++r) {
            size_t arity = 0;
            for (int fi : dst.facts_by_rel[r])
                arity = std::max(arity, dst.facts[fi].args.size());
            by_rel_pos_val[r].assign(arity, std::vector<std::vector<int>>(dst.n()));
            for (int fi : dst.facts_by_rel[r]) {
                const auto& args = dst.facts[fi].args;
                for (size_t p = 0; p < args.size(); ++p)
                    by_rel_pos_val[r][p][args[p]].push_back(fi);
            }
        }
    }
};

// Occurrence-based (weak) arc consistency: a candidate v for the p-th
// occurrence in a source fact is supported when some target fact over the
// same relation carries v at p and values from the current domains
// elsewhere. Repeated variables within a fact are deliberately not
// synchronized; this matches the tree-obstruction semantics.
class Propagator {
public:
    Propagator(const Indexed& src, const TargetIndex& tgt, Budget& budget)
        : src_(src), tgt_(tgt), budget_(budget) {}

    // Removes unsupported candidates until stable. Returns false iff some
    // domain became empty.
    bool propagate(std::vector<std::vector<char>>& dom) const {
        bool changed = true;
        while (changed) {
            changed = false;
            budget_.tick();
            for (const auto& f : src_.facts) {
                for (size_t p = 0; p < f.args.size(); ++p) {
                    int x = f.args[p];
                    for (int v = 0; v < (int)dom[x].size(); ++v) {
                        if (!dom[x][v]) continue;
                        if (!supported(f, p, v, dom)) {
                            dom[x][v] = 0;
                            changed = true;
                        }
                    }
                    if (empty(dom[x])) return false;
                }
            }
        }
        return true;
    }

private:
    static bool empty(const std::vector<char>& d) {
        return std::find(d.begin(), d.end(), 1) == d.end();
    }

    bool supported(const Indexed::IFact& f, size_t p, int v,
                   const std::vector<std::vector<char>>& dom) const {
        const auto& index = tgt_.by_rel_pos_val[f.rel];
        if (p >= index.size() || v >= (int)index[p].size()) return false;
        for (int gi : index[p][v]) {
            budget_.tick();
            const auto& g = tgt_.inst.facts[gi].args;
            bool ok = true;
            for (size_t q = 0; q < g.size(); ++q) {
                if (q == p) continue;
                if (!dom[f.args[q]][g[q]]) { ok = false; break; }
            }
            if (ok) return true;
        }
        return false;
    }

    const Indexed& src_;
    const TargetIndex& tgt_;
    Budget& budget_;
};

// Pins each distinguished source value to its positional target. A source
// value repeated at positions with different targets empties its domain.
std::vector<std::vector<char>> initial_domains(const Indexed& src, const Indexed& dst,
                                               bool& consistent) {
    consistent = true;
    std::vector<std::vector<char>> dom(src.n(), std::vector<char>(dst.n(), 1));
    for (size_t i = 0; i < src.distinguished.size(); ++i) {
        int x = src.distinguished[i];
        int b = dst.distinguished[i];
        for (int v = 0; v < dst.n(); ++v)
            if (v != b) dom[x][v] = 0;
    }
    for (int x : src.distinguished)
        if (std::find(dom[x].begin(), dom[x].end(), 1) == dom[x].end()) consistent = false;
    return dom;
}

bool search(const Indexed& src, const TargetIndex& tgt, const Propagator& prop,
            std::vector<std::vector<char>> dom, const std::vector<int>& order, size_t k,
            Budget& budget, std::vector<int>& out) {
    budget.tick();
    if (!prop.propagate(dom)) return false;
    while (k < order.size()) {
        int x = order[k];
        int count = 0, single = -1;
        for (int v = 0; v < (int)dom[x].size(); ++v)
            if (dom[x][v]) { ++count; single = v; }
        if (count == 1) {
            out[x] = single;
            ++k;
            continue;
        }
        for (int v = 0; v < (int)dom[x].size(); ++v) {
            if (!dom[x][v]) continue;
            auto next = dom;
            std::fill(next[x].begin(), next[x].end(), 0);
            next[x][v] = 1;
            out[x] = v;
            if (search(src, tgt, prop, std::move(next), order, k + 1, budget, out))
                return true;
        }
        return false;
    }
    return true;
}

std::optional<std::vector<int>> solve(const Indexed& src, const Indexed& dst,
                                      Budget& budget) {
    bool consistent = true;
    auto dom = initial_domains(src, dst, consistent);
    if (!consistent) return std::nullopt;
    TargetIndex tgt(dst);
    Propagator prop(src, tgt, budget);

    std::vector<int> order(src.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (src.degree(a) != src.degree(b)) return src.degree(a) > src.degree(b);
        return src.values[a] < src.values[b];
    });

    std::vector<int> out(src.n(), -1);
    if (!search(src, tgt, prop, std::move(dom), order, 0, budget, out))
        return std::nullopt;
    return out;
}

} // namespace

std::optional<Mapping> find_homomorphism(const PointedInstance& src,
                                         const PointedInstance& dst,
                                         const Options& opts) {
    require_same_shape(src, dst);
    Budget budget(opts.budget);
    Indexed isrc(src), idst(dst);
    auto assignment = solve(isrc, idst, budget);
    if (!assignment) return std::nullopt;
    Mapping m;
    for (int x = 0; x < isrc.n(); ++x) m.pairs[isrc.values[x]] = idst.values[(*assignment)[x]];
    return m;
}

bool homomorphic(const PointedInstance& src, const PointedInstance& dst,
                 const Options& opts) {
    return find_homomorphism(src, dst, opts).has_value();
}

bool arc_consistent(const PointedInstance& src, const PointedInstance& dst,
                    const Options& opts) {
    require_same_shape(src, dst);
    Budget budget(opts.budget);
    Indexed isrc(src), idst(dst);
    if (idst.n() == 0) return isrc.n() == 0;
    bool consistent = true;
    auto dom = initial_domains(isrc, idst, consistent);
    if (!consistent) return false;
    TargetIndex tgt(idst);
    Propagator prop(isrc, tgt, budget);
    return prop.propagate(dom);
}

PointedInstance compute_core(const PointedInstance& e, const Options& opts) {
    Budget budget(opts.budget);
    PointedInstance current = e;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (const std::string& u : current.active_domain()) {
            bool isDistinguished = false;
            for (const std::string& d : current.distinguished())
                if (d == u) { isDistinguished = true; break; }
            if (isDistinguished) continue;

            std::vector<Fact> reduced;
            for (const Fact& f : current.facts())
                if (std::find(f.args.begin(), f.args.end(), u) == f.args.end())
                    reduced.push_back(f);
            if (reduced.size() == current.facts().size()) continue;
            PointedInstance target(current.schema(), std::move(reduced),
                                   current.distinguished());

            Indexed isrc(current), idst(target);
            auto assignment = solve(isrc, idst, budget);
            if (!assignment) continue;

            // Restrict to the image of the retraction.
            std::vector<Fact> image;
            for (const Fact& f : current.facts()) {
                Fact g{f.relation, {}};
                for (const std::string& a : f.args)
                    g.args.push_back(idst.values[(*assignment)[isrc.value_index.at(a)]]);
                image.push_back(std::move(g));
            }
            current = PointedInstance(current.schema(), std::move(image),
                                      current.distinguished());
            shrunk = true;
            break;
        }
    }
    return current;
}

PointedInstance direct_product(const PointedInstance& a, const PointedInstance& b,
                               const Options& opts) {
    require_same_shape(a, b);
    Budget budget(opts.budget);
    auto pair_name = [](const std::string& x, const std::string& y) {
        return "(" + x + "," + y + ")";
    };
    std::map<std::string, std::vector<const Fact*>> bByRel;
    for (const Fact& g : b.facts()) bByRel[g.relation].push_back(&g);

    std::vector<Fact> facts;
    for (const Fact& f : a.facts()) {
        auto it = bByRel.find(f.relation);
        if (it == bByRel.end()) continue;
        for (const Fact* g : it->second) {
            budget.tick();
            Fact h{f.relation, {}};
            for (size_t i = 0; i < f.args.size(); ++i)
                h.args.push_back(pair_name(f.args[i], g->args[i]));
            facts.push_back(std::move(h));
        }
    }
    std::vector<std::string> distinguished;
    for (int i = 0; i < a.arity(); ++i)
        distinguished.push_back(pair_name(a.distinguished()[i], b.distinguished()[i]));
    return PointedInstance(a.schema(), std::move(facts), std::move(distinguished));
}

PointedInstance direct_product(const Schema& schema, int arity,
                               const std::vector<PointedInstance>& es,
                               const Options& opts) {
    if (es.empty()) return all_facts_singleton(schema, arity);
    PointedInstance acc = es.front();
    require_same_schema(acc.schema(), schema);
    if (acc.arity() != arity) throw ArityMismatchError("product arity mismatch");
    for (size_t i = 1; i < es.size(); ++i) acc = direct_product(acc, es[i], opts);
    return acc;
}

PointedInstance disjoint_union(const PointedInstance& a, const PointedInstance& b,
                               const Options&) {
    require_same_shape(a, b);
    // Tag values apart, then identify distinguished tuples positionally; the
    // quotient below also covers repeated distinguished values (the
    // alpha-quotient form of the union).
    auto tagA = [](const std::string& v) { return "l:" + v; };
    auto tagB = [](const std::string& v) { return "r:" + v; };

    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& v) {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v) return v;
        std::string root = find(it->second);
        parent[v] = root;
        return root;
    };
    auto unite = [&](const std::string& x, const std::string& y) {
        std::string rx = find(x), ry = find(y);
        if (rx == ry) return;
        if (ry < rx) std::swap(rx, ry); // keep the lexicographically least as root
        parent[ry] = rx;
    };
    for (int i = 0; i < a.arity(); ++i)
        unite(tagA(a.distinguished()[i]), tagB(b.distinguished()[i]));

    std::vector<Fact> facts;
    for (const Fact& f : a.facts()) {
        Fact g{f.relation, {}};
        for (const std::string& v : f.args) g.args.push_back(find(tagA(v)));
        facts.push_back(std::move(g));
    }
    for (const Fact& f : b.facts()) {
        Fact g{f.relation, {}};
        for (const std::string& v : f.args) g.args.push_back(find(tagB(v)));
        facts.push_back(std::move(g));
    }
    std::vector<std::string> distinguished;
    for (int i = 0; i < a.arity(); ++i) distinguished.push_back(find(tagA(a.distinguished()[i])));
    return PointedInstance(a.schema(), std::move(facts), std::move(distinguished));
}

bool hom_equivalent(const PointedInstance& a, const PointedInstance& b,
                    const Options& opts) {
    return homomorphic(a, b, opts) && homomorphic(b, a, opts);
}

} // namespace fitcq
