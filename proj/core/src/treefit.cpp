#include "fitcq/treefit.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "indexed.hpp"

namespace fitcq {
namespace {

using detail::Indexed;

void require_binary(const Schema& schema) {
    if (!schema.is_binary())
        throw NonBinarySchemaError("this operation needs a schema of arity <= 2");
}

void require_unary_pointed(const PointedInstance& e) {
    require_binary(e.schema());
    if (e.arity() != 1)
        throw ArityMismatchError("tree operations need arity-1 pointed instances");
}

// Role: a binary relation read forwards or backwards.
struct Role {
    std::string rel;
    bool forward = true;

    auto operator<=>(const Role&) const = default;
};

// ---------------------------------------------------------------------------
// Simulations

struct BinaryView {
    Indexed idx;
    // per value: (rel id, other endpoint), split by direction
    std::vector<std::vector<std::pair<int, int>>> out, in;
    std::vector<std::set<int>> unaries; // unary rel ids per value

    explicit BinaryView(const PointedInstance& e) : idx(e) {
        out.resize(idx.n());
        in.resize(idx.n());
        unaries.resize(idx.n());
        for (const auto& f : idx.facts) {
            if (f.args.size() == 1) {
                unaries[f.args[0]].insert(f.rel);
            } else {
                out[f.args[0]].push_back({f.rel, f.args[1]});
                in[f.args[1]].push_back({f.rel, f.args[0]});
            }
        }
    }
};

// Greatest fixpoint by deleting violating pairs; the worklist tracks source
// values whose pairs need rechecking.
std::vector<std::vector<char>> simulation_table(const BinaryView& i, const BinaryView& j,
                                                Budget& budget) {
    int n = i.idx.n(), m = j.idx.n();
    std::vector<std::vector<char>> sim(n, std::vector<char>(m, 1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
            for (int rel : i.unaries[a])
                if (!j.unaries[b].count(rel)) { sim[a][b] = 0; break; }

    std::deque<int> dirty;
    std::vector<char> queued(n, 1);
    for (int a = 0; a < n; ++a) dirty.push_back(a);

    auto matches = [&](const std::vector<std::pair<int, int>>& edges, int b,
                       const std::vector<std::pair<int, int>>& candidates) {
        for (auto [rel, other] : edges) {
            bool ok = false;
            for (auto [crel, cother] : candidates) {
                budget.tick();
                if (crel == rel && sim[other][cother]) { ok = true; break; }
            }
            if (!ok) return false;
        }
        (void)b;
        return true;
    };

    while (!dirty.empty()) {
        int a = dirty.front();
        dirty.pop_front();
        queued[a] = 0;
        for (int b = 0; b < m; ++b) {
            if (!sim[a][b]) continue;
            budget.tick();
            bool ok = matches(i.out[a], b, j.out[b]) && matches(i.in[a], b, j.in[b]);
            if (!ok) {
                sim[a][b] = 0;
                for (auto [rel, other] : i.out[a])
                    if (!queued[other]) { queued[other] = 1; dirty.push_back(other); }
                for (auto [rel, other] : i.in[a])
                    if (!queued[other]) { queued[other] = 1; dirty.push_back(other); }
                if (!queued[a]) { queued[a] = 1; dirty.push_back(a); }
            }
        }
    }
    return sim;
}

} // namespace

bool SimulationRelation::contains(const std::string& a, const std::string& b) const {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
}

SimulationRelation max_simulation(const PointedInstance& i, const PointedInstance& j,
                                  const Options& opts) {
    require_binary(i.schema());
    require_same_schema(i.schema(), j.schema());
    Budget budget(opts.budget);
    BinaryView vi(i), vj(j);
    auto table = simulation_table(vi, vj, budget);
    SimulationRelation out;
    for (const std::string& a : i.active_domain())
        for (const std::string& b : j.active_domain())
            if (table[vi.idx.value_index.at(a)][vj.idx.value_index.at(b)])
                out.pairs.push_back({a, b});
    return out;
}

bool simulates(const PointedInstance& e1, const PointedInstance& e2, const Options& opts) {
    require_unary_pointed(e1);
    require_unary_pointed(e2);
    require_same_schema(e1.schema(), e2.schema());
    auto adom1 = e1.active_domain();
    const std::string& a = e1.distinguished()[0];
    if (!std::binary_search(adom1.begin(), adom1.end(), a))
        return true; // no facts touch the root, so anything simulates it
    Budget budget(opts.budget);
    BinaryView v1(e1), v2(e2);
    auto table = simulation_table(v1, v2, budget);
    const std::string& b = e2.distinguished()[0];
    auto it = v2.idx.value_index.find(b);
    if (it == v2.idx.value_index.end()) return false;
    return table[v1.idx.value_index.at(a)][it->second];
}

// ---------------------------------------------------------------------------
// Unraveling

namespace {

std::string escape_value(const std::string& v) {
    std::string out;
    for (char c : v) {
        if (c == '\\' || c == '.') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

PointedInstance unravel(const PointedInstance& e, int m, const Options& opts) {
    require_unary_pointed(e);
    if (m < 1) throw InvalidParameterError("unraveling depth must be >= 1");
    Budget budget(opts.budget);
    BinaryView view(e);
    const std::string& rootValue = e.distinguished()[0];
    std::string rootName = escape_value(rootValue);

    std::vector<Fact> facts;
    auto itRoot = view.idx.value_index.find(rootValue);
    if (itRoot == view.idx.value_index.end())
        return PointedInstance(e.schema(), {}, {rootName});

    struct Node {
        int value;
        std::string name;
        int depth;
    };
    std::deque<Node> queue{{itRoot->second, rootName, 1}};
    while (!queue.empty()) {
        Node node = queue.front();
        queue.pop_front();
        budget.tick();
        for (int rel : view.unaries[node.value])
            facts.push_back({view.idx.rel_names[rel], {node.name}});
        if (node.depth == m) continue;
        for (auto [rel, other] : view.out[node.value]) {
            std::string child = node.name + ".>" + view.idx.rel_names[rel] + "." +
                                escape_value(view.idx.values[other]);
            facts.push_back({view.idx.rel_names[rel], {node.name, child}});
            queue.push_back({other, child, node.depth + 1});
        }
        for (auto [rel, other] : view.in[node.value]) {
            std::string child = node.name + ".<" + view.idx.rel_names[rel] + "." +
                                escape_value(view.idx.values[other]);
            facts.push_back({view.idx.rel_names[rel], {child, node.name}});
            queue.push_back({other, child, node.depth + 1});
        }
    }
    return PointedInstance(e.schema(), std::move(facts), {rootName});
}

// ---------------------------------------------------------------------------
// Rooted tree view of tree CQs

namespace {

struct TreeNode {
    std::set<std::string> unaries;
    std::vector<std::pair<Role, int>> children; // role + node id
    int parent = -1;
    Role parentRole;
};

struct RootedTree {
    std::vector<TreeNode> nodes; // node 0 is the root

    int add_node() {
        nodes.push_back({});
        return static_cast<int>(nodes.size()) - 1;
    }
};

RootedTree tree_of(const ConjunctiveQuery& q) {
    require_binary(q.schema());
    if (q.arity() != 1) throw NotATreeError("tree CQs are unary");
    const PointedInstance& body = q.body;
    const std::string& root = body.distinguished()[0];

    std::map<std::string, int> nodeOf;
    RootedTree tree;
    nodeOf[root] = tree.add_node();

    struct Edge {
        std::string from, to, rel;
        bool used = false;
    };
    std::vector<Edge> edges;
    std::map<std::string, std::vector<int>> touching;
    for (const Fact& f : body.facts()) {
        if (f.args.size() == 1) continue;
        if (f.args[0] == f.args[1]) throw NotATreeError("self-loop in tree CQ body");
        edges.push_back({f.args[0], f.args[1], f.relation});
        touching[f.args[0]].push_back(static_cast<int>(edges.size()) - 1);
        touching[f.args[1]].push_back(static_cast<int>(edges.size()) - 1);
    }

    std::deque<std::string> queue{root};
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        int id = nodeOf.at(v);
        for (int ei : touching[v]) {
            Edge& edge = edges[ei];
            if (edge.used) continue;
            edge.used = true;
            bool forward = edge.from == v;
            const std::string& w = forward ? edge.to : edge.from;
            if (nodeOf.count(w)) throw NotATreeError("cycle in tree CQ body");
            int wid = tree.add_node();
            nodeOf[w] = wid;
            Role role{edge.rel, forward};
            tree.nodes[id].children.push_back({role, wid});
            tree.nodes[wid].parent = id;
            tree.nodes[wid].parentRole = role;
            queue.push_back(w);
        }
    }
    for (const Edge& edge : edges)
        if (!edge.used) throw NotATreeError("disconnected tree CQ body");
    for (const Fact& f : body.facts()) {
        if (f.args.size() != 1) continue;
        auto it = nodeOf.find(f.args[0]);
        if (it == nodeOf.end()) throw NotATreeError("disconnected tree CQ body");
        tree.nodes[it->second].unaries.insert(f.relation);
    }
    return tree;
}

ConjunctiveQuery cq_of(const RootedTree& tree, const Schema& schema) {
    std::vector<Fact> facts;
    auto name = [](int id) { return "n" + std::to_string(id); };
    for (size_t id = 0; id < tree.nodes.size(); ++id) {
        for (const std::string& u : tree.nodes[id].unaries)
            facts.push_back({u, {name(static_cast<int>(id))}});
        for (const auto& [role, child] : tree.nodes[id].children) {
            if (role.forward)
                facts.push_back({role.rel, {name(static_cast<int>(id)), name(child)}});
            else
                facts.push_back({role.rel, {name(child), name(static_cast<int>(id))}});
        }
    }
    return ConjunctiveQuery{PointedInstance(schema, std::move(facts), {"n0"})};
}

// Deep copy of a subtree into another tree; returns the new node id.
int copy_subtree(const RootedTree& src, int node, RootedTree& dst,
                 std::vector<int>* originOut, int origin) {
    int id = dst.add_node();
    if (originOut) {
        originOut->resize(dst.nodes.size(), -1);
        (*originOut)[id] = origin >= 0 ? origin : node;
    }
    dst.nodes[id].unaries = src.nodes[node].unaries;
    for (const auto& [role, child] : src.nodes[node].children) {
        int cid = copy_subtree(src, child, dst, originOut, -1);
        dst.nodes[id].children.push_back({role, cid});
        dst.nodes[cid].parent = id;
        dst.nodes[cid].parentRole = role;
    }
    return id;
}

std::string canonical_key(const RootedTree& tree, int node) {
    std::string out = "(";
    for (const std::string& u : tree.nodes[node].unaries) out += u + ";";
    out += "|";
    std::vector<std::string> childKeys;
    for (const auto& [role, child] : tree.nodes[node].children)
        childKeys.push_back((role.forward ? ">" : "<") + role.rel +
                            canonical_key(tree, child));
    std::sort(childKeys.begin(), childKeys.end());
    for (const std::string& k : childKeys) out += k + ",";
    return out + ")";
}

// q re-rooted at the given node: the parent chain becomes inverted children.
RootedTree reroot(const RootedTree& tree, int newRoot) {
    RootedTree out;
    // recursive move: copy node, with children = original children plus the
    // parent direction, except the node we came from.
    std::function<int(int, int)> build = [&](int node, int from) {
        int id = out.add_node();
        out.nodes[id].unaries = tree.nodes[node].unaries;
        for (const auto& [role, child] : tree.nodes[node].children) {
            if (child == from) continue;
            int cid = build(child, node);
            out.nodes[id].children.push_back({role, cid});
            out.nodes[cid].parent = id;
            out.nodes[cid].parentRole = role;
        }
        int parent = tree.nodes[node].parent;
        if (parent >= 0 && parent != from) {
            Role role = tree.nodes[node].parentRole;
            Role inverted{role.rel, !role.forward};
            int cid = build(parent, node);
            out.nodes[id].children.push_back({inverted, cid});
            out.nodes[cid].parent = id;
            out.nodes[cid].parentRole = inverted;
        }
        return id;
    };
    build(newRoot, -1);
    return out;
}

} // namespace

void require_tree_cq(const ConjunctiveQuery& q) { tree_of(q); }

// ---------------------------------------------------------------------------
// Tree frontier (generalize + compensate)

namespace {

struct GeneralizedTree {
    RootedTree tree;
    std::vector<int> origin; // node id in the original query
};

// All one-step generalizations of the subtree rooted at x, each a tree rooted
// at a copy of x.
std::vector<GeneralizedTree> generalize(const RootedTree& q, int x) {
    std::vector<GeneralizedTree> out;
    // drop one unary atom at x
    for (const std::string& u : q.nodes[x].unaries) {
        GeneralizedTree g;
        int id = copy_subtree(q, x, g.tree, &g.origin, x);
        g.tree.nodes[id].unaries.erase(u);
        out.push_back(std::move(g));
    }
    // drop one successor subtree, splicing in the generalizations of the child
    for (size_t ci = 0; ci < q.nodes[x].children.size(); ++ci) {
        auto [role, y] = q.nodes[x].children[ci];
        GeneralizedTree g;
        // copy x's subtree without child ci
        int id = g.tree.add_node();
        g.origin.resize(1, x);
        g.tree.nodes[id].unaries = q.nodes[x].unaries;
        for (size_t cj = 0; cj < q.nodes[x].children.size(); ++cj) {
            if (cj == ci) continue;
            auto [role2, y2] = q.nodes[x].children[cj];
            int cid = copy_subtree(q, y2, g.tree, &g.origin, y2);
            g.tree.nodes[id].children.push_back({role2, cid});
            g.tree.nodes[cid].parent = id;
            g.tree.nodes[cid].parentRole = role2;
        }
        for (GeneralizedTree& sub : generalize(q, y)) {
            // graft a copy of each generalization of y below x
            std::function<int(int)> graft = [&](int node) {
                int nid = g.tree.add_node();
                g.origin.resize(g.tree.nodes.size(), -1);
                g.origin[nid] = sub.origin[node];
                g.tree.nodes[nid].unaries = sub.tree.nodes[node].unaries;
                for (const auto& [crole, child] : sub.tree.nodes[node].children) {
                    int cid = graft(child);
                    g.tree.nodes[nid].children.push_back({crole, cid});
                    g.tree.nodes[cid].parent = nid;
                    g.tree.nodes[cid].parentRole = crole;
                }
                return nid;
            };
            int gid = graft(0);
            g.tree.nodes[id].children.push_back({role, gid});
            g.tree.nodes[gid].parent = id;
            g.tree.nodes[gid].parentRole = role;
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace

Frontier tree_frontier(const ConjunctiveQuery& q, const Options&) {
    RootedTree tree = tree_of(q);
    Frontier out;
    for (GeneralizedTree& p : generalize(tree, 0)) {
        // Compensate: for every edge of p, attach, at the child end, a copy of
        // q re-rooted at the original variable of the parent end.
        size_t originalNodes = p.tree.nodes.size();
        for (size_t node = 0; node < originalNodes; ++node) {
            for (size_t ci = 0; ci < p.tree.nodes[node].children.size(); ++ci) {
                if (p.tree.nodes[node].children[ci].second >= (int)originalNodes)
                    continue; // compensation edges are not compensated again
                auto [role, child] = p.tree.nodes[node].children[ci];
                int parentOrigin = p.origin[node];
                RootedTree compensator = reroot(tree, parentOrigin);
                int zid = copy_subtree(compensator, 0, p.tree, nullptr, -1);
                Role inverted{role.rel, !role.forward};
                p.tree.nodes[child].children.push_back({inverted, zid});
                p.tree.nodes[zid].parent = child;
                p.tree.nodes[zid].parentRole = inverted;
            }
        }
        out.members.push_back(cq_of(p.tree, q.schema()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fitting verification and searches

namespace {

bool tree_fits(const ConjunctiveQuery& q, const LabeledExamples& examples,
               const Options& opts) {
    for (const PointedInstance& e : examples.positives)
        if (!simulates(q.body, e, opts)) return false;
    for (const PointedInstance& e : examples.negatives)
        if (simulates(q.body, e, opts)) return false;
    return true;
}

void require_tree_examples(const LabeledExamples& examples) {
    require_binary(examples.schema);
    if (examples.arity != 1)
        throw ArityMismatchError("tree fitting needs arity-1 examples");
}

} // namespace

bool verify_tree_fitting(FittingKind kind, const ConjunctiveQuery& q,
                         const LabeledExamples& examples, const Options& opts) {
    require_tree_examples(examples);
    require_same_schema(q.schema(), examples.schema);
    require_tree_cq(q);
    switch (kind) {
    case FittingKind::Any:
        return tree_fits(q, examples, opts);
    case FittingKind::MostSpecific: {
        if (!tree_fits(q, examples, opts)) return false;
        PointedInstance p = positive_product(examples, opts);
        return simulates(p, q.body, opts);
    }
    case FittingKind::WeaklyMostGeneral: {
        if (!tree_fits(q, examples, opts)) return false;
        for (const ConjunctiveQuery& member : tree_frontier(q, opts).members) {
            bool reached = false;
            for (const PointedInstance& e : examples.negatives)
                if (simulates(member.body, e, opts)) { reached = true; break; }
            if (!reached) return false;
        }
        return true;
    }
    case FittingKind::Unique:
        return verify_tree_fitting(FittingKind::MostSpecific, q, examples, opts) &&
               verify_tree_fitting(FittingKind::WeaklyMostGeneral, q, examples, opts);
    }
    throw InvalidParameterError("unknown fitting kind");
}

SearchOutcome exists_tree_fitting(const LabeledExamples& examples, int depth_cap,
                                  const Options& opts) {
    require_tree_examples(examples);
    if (depth_cap < 1) throw InvalidParameterError("depth cap must be >= 1");
    PointedInstance p = positive_product(examples, opts);
    for (int m = 1; m <= depth_cap; ++m) {
        PointedInstance u = unravel(p, m, opts);
        bool fits = true;
        for (const PointedInstance& e : examples.negatives)
            if (simulates(u, e, opts)) { fits = false; break; }
        if (fits && u.distinguished_in_adom())
            return SearchOutcome::found(canonical_cq(u), m);
    }
    return SearchOutcome::not_up_to_cap(depth_cap);
}

SearchOutcome exists_most_specific_tree(const LabeledExamples& examples, int depth_cap,
                                        const Options& opts) {
    SearchOutcome fitting = exists_tree_fitting(examples, depth_cap, opts);
    if (fitting.status != SearchStatus::Found)
        return SearchOutcome::not_up_to_cap(depth_cap);
    PointedInstance p = positive_product(examples, opts);
    for (int m = 1; m <= depth_cap; ++m) {
        PointedInstance u = unravel(p, m, opts);
        if (!u.distinguished_in_adom()) continue;
        if (simulates(p, u, opts)) return SearchOutcome::found(canonical_cq(u), m);
    }
    return SearchOutcome::not_up_to_cap(depth_cap);
}

// ---------------------------------------------------------------------------
// Tree CQ enumeration

namespace {

struct TreeGen {
    const Schema& schema;
    int maxDegree;
    std::vector<Role> roles;
    std::vector<std::string> unaryRels;
    // memo[n]: canonical trees with exactly n nodes, sorted by key
    std::vector<std::vector<RootedTree>> memo;
    std::vector<std::vector<std::string>> keys;

    TreeGen(const Schema& s, int degree) : schema(s), maxDegree(degree) {
        for (const auto& [rel, arity] : schema.relations) {
            if (arity == 2) {
                roles.push_back({rel, true});
                roles.push_back({rel, false});
            } else {
                unaryRels.push_back(rel);
            }
        }
    }

    const std::vector<RootedTree>& trees_of_size(int n) {
        while ((int)memo.size() <= n) {
            int target = static_cast<int>(memo.size());
            memo.push_back({});
            keys.push_back({});
            if (target == 0) continue;
            build(target);
        }
        return memo[n];
    }

private:
    void build(int n) {
        // choose root unaries and a multiset of (role, subtree) children
        std::vector<RootedTree> out;
        std::vector<std::string> outKeys;

        // choices[s]: all (role, tree index) pairs for subtrees of size s
        std::vector<std::vector<std::pair<size_t, size_t>>> choices(n);
        for (int s = 1; s < n; ++s) {
            trees_of_size(s);
            for (size_t r = 0; r < roles.size(); ++r)
                for (size_t t = 0; t < memo[s].size(); ++t)
                    choices[s].push_back({r, t});
        }

        // children as a non-increasing sequence of (size, choice index)
        std::vector<std::pair<int, size_t>> current;
        std::function<void(int, int, size_t)> rec = [&](int remaining, int maxSize,
                                                        size_t maxChoice) {
            if (remaining == 0) {
                emit(current, choices, out, outKeys);
                return;
            }
            if (maxDegree >= 0 && (int)current.size() >= maxDegree) return;
            for (int s = std::min(remaining, maxSize); s >= 1; --s) {
                size_t limit = (s == maxSize) ? maxChoice : choices[s].size();
                for (size_t c = 0; c < limit; ++c) {
                    current.push_back({s, c});
                    rec(remaining - s, s, c + 1);
                    current.pop_back();
                }
            }
        };
        rec(n - 1, n - 1, n >= 2 ? choices[n - 1].size() : 0);
        memo[n] = std::move(out);
        keys[n] = std::move(outKeys);
    }

    void emit(const std::vector<std::pair<int, size_t>>& children,
              const std::vector<std::vector<std::pair<size_t, size_t>>>& choices,
              std::vector<RootedTree>& out, std::vector<std::string>& outKeys) {
        std::uint32_t unaryCount = static_cast<std::uint32_t>(unaryRels.size());
        for (std::uint32_t bits = 0; bits < (1u << unaryCount); ++bits) {
            RootedTree tree;
            int root = tree.add_node();
            for (std::uint32_t i = 0; i < unaryCount; ++i)
                if (bits & (1u << i)) tree.nodes[root].unaries.insert(unaryRels[i]);
            for (auto [s, c] : children) {
                auto [r, t] = choices[s][c];
                int cid = copy_subtree(memo[s][t], 0, tree, nullptr, -1);
                tree.nodes[root].children.push_back({roles[r], cid});
                tree.nodes[cid].parent = root;
                tree.nodes[cid].parentRole = roles[r];
            }
            std::string key = canonical_key(tree, 0);
            bool dup = false;
            for (const std::string& k : outKeys)
                if (k == key) { dup = true; break; }
            if (!dup) {
                out.push_back(std::move(tree));
                outKeys.push_back(std::move(key));
            }
        }
    }
};

} // namespace

std::vector<ConjunctiveQuery> enumerate_tree_cqs(const Schema& schema, int max_nodes,
                                                 int max_degree) {
    require_binary(schema);
    TreeGen gen(schema, max_degree);
    std::vector<ConjunctiveQuery> out;
    for (int n = 1; n <= max_nodes; ++n) {
        std::vector<std::pair<std::string, const RootedTree*>> ordered;
        const auto& trees = gen.trees_of_size(n);
        for (const RootedTree& t : trees)
            ordered.push_back({canonical_key(t, 0), &t});
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [key, t] : ordered) {
            // skip the unsafe bare root
            if (n == 1 && t->nodes[0].unaries.empty()) continue;
            out.push_back(cq_of(*t, schema));
        }
    }
    return out;
}

SearchOutcome search_weakly_most_general_tree(const LabeledExamples& examples, int size_cap,
                                              const Options& opts) {
    require_tree_examples(examples);
    int degreeBound = 0;
    for (const PointedInstance& e : examples.negatives)
        degreeBound += static_cast<int>(e.facts().size());
    for (const ConjunctiveQuery& q :
         enumerate_tree_cqs(examples.schema, size_cap, degreeBound))
        if (verify_tree_fitting(FittingKind::WeaklyMostGeneral, q, examples, opts))
            return SearchOutcome::found(q);
    return SearchOutcome::not_up_to_cap(size_cap);
}

bool verify_tree_basis(const std::vector<ConjunctiveQuery>& qs,
                       const LabeledExamples& examples, const Options& opts) {
    require_tree_examples(examples);
    for (const ConjunctiveQuery& q : qs) {
        require_tree_cq(q);
        if (!tree_fits(q, examples, opts)) return false;
    }
    std::vector<DualitySide> duals;
    for (const ConjunctiveQuery& q : qs)
        duals.push_back(single_obstruction_dual(compute_core(q.body, opts), opts));

    PointedInstance p = compute_core(positive_product(examples, opts), opts);
    std::vector<int> pick(duals.size(), 0);
    while (true) {
        std::vector<PointedInstance> factors;
        for (size_t i = 0; i < duals.size(); ++i) factors.push_back(duals[i].examples[pick[i]]);
        PointedInstance d = direct_product(examples.schema, examples.arity, factors, opts);
        PointedInstance dp = direct_product(d, p, opts);
        bool covered = false;
        for (const PointedInstance& e : examples.negatives)
            if (simulates(dp, e, opts)) { covered = true; break; }
        if (!covered) return false;
        int pos = static_cast<int>(duals.size()) - 1;
        while (pos >= 0 && pick[pos] + 1 == (int)duals[pos].examples.size()) pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    return true;
}

namespace {

// One-step weakenings used by criticality: drop one unary atom or one
// successor subtree.
std::vector<ConjunctiveQuery> one_step_weakenings(const RootedTree& tree,
                                                  const Schema& schema) {
    std::vector<ConjunctiveQuery> out;
    for (size_t node = 0; node < tree.nodes.size(); ++node) {
        for (const std::string& u : tree.nodes[node].unaries) {
            RootedTree t;
            copy_subtree(tree, 0, t, nullptr, -1);
            t.nodes[node].unaries.erase(u);
            out.push_back(cq_of(t, schema));
        }
        for (size_t ci = 0; ci < tree.nodes[node].children.size(); ++ci) {
            RootedTree t;
            copy_subtree(tree, 0, t, nullptr, -1);
            t.nodes[node].children.erase(t.nodes[node].children.begin() + ci);
            // orphaned descendants stay in the node vector but are
            // unreachable; cq_of must skip them
            RootedTree pruned;
            copy_subtree(t, 0, pruned, nullptr, -1);
            out.push_back(cq_of(pruned, schema));
        }
    }
    return out;
}

} // namespace

SearchOutcome search_tree_basis(const LabeledExamples& examples, int size_cap,
                                const Options& opts) {
    require_tree_examples(examples);
    int degreeBound = 0;
    for (const PointedInstance& e : examples.negatives)
        degreeBound += static_cast<int>(e.facts().size());

    std::vector<ConjunctiveQuery> criticals;
    for (const ConjunctiveQuery& q :
         enumerate_tree_cqs(examples.schema, size_cap, degreeBound)) {
        if (!tree_fits(q, examples, opts)) continue;
        bool critical = true;
        for (const ConjunctiveQuery& weaker : one_step_weakenings(tree_of(q), q.schema())) {
            bool breaks = false;
            for (const PointedInstance& e : examples.negatives)
                if (simulates(weaker.body, e, opts)) { breaks = true; break; }
            if (!breaks) { critical = false; break; }
        }
        if (critical) criticals.push_back(q);
    }
    if (criticals.empty()) return SearchOutcome::not_up_to_cap(size_cap);
    if (verify_tree_basis(criticals, examples, opts))
        return SearchOutcome::found_set(std::move(criticals));
    SearchOutcome out = SearchOutcome::not_up_to_cap(size_cap);
    out.witnesses = std::move(criticals);
    return out;
}

} // namespace fitcq
