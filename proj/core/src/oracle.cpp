#include "fitcq/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "indexed.hpp"

namespace fitcq::oracle {
namespace {

using detail::Indexed;

constexpr int kMaxFactSpace = 256;
using FactMask = std::array<std::uint64_t, 4>;

FactMask empty_mask() { return {0, 0, 0, 0}; }

void set_bit(FactMask& m, int i) { m[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

// Membership strings compared position by position; a 1 at the first
// differing fact index makes the set smaller. Any fixed total order would do;
// this one keeps dense-early sets first.
int compare_masks(const FactMask& a, const FactMask& b) {
    for (int w = 0; w < 4; ++w) {
        std::uint64_t diff = a[w] ^ b[w];
        if (!diff) continue;
        std::uint64_t low = diff & ~(diff - 1);
        return (a[w] & low) ? -1 : 1;
    }
    return 0;
}

std::string value_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "v" + std::to_string(i);
}

int value_id(const std::string& name) {
    if (name.size() > 1 && name[0] == 'v') return std::stoi(name.substr(1));
    return name[0] - 'a';
}

struct FactSpace {
    std::vector<Fact> facts;                  // sorted
    std::map<Fact, int> index;
    std::vector<std::uint32_t> value_usage;   // per fact: bitmask of value ids
    std::vector<std::vector<int>> occurrence; // per fact: occurrence count per value

    FactSpace(const Schema& schema, int n) {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back(value_name(i));
        for (const auto& [rel, arity] : schema.relations) {
            std::vector<int> idx(arity, 0);
            while (true) {
                Fact f{rel, {}};
                for (int i : idx) f.args.push_back(names[i]);
                facts.push_back(std::move(f));
                int pos = arity - 1;
                while (pos >= 0 && idx[pos] == n - 1) idx[pos--] = 0;
                if (pos < 0) break;
                ++idx[pos];
            }
        }
        std::sort(facts.begin(), facts.end());
        for (size_t i = 0; i < facts.size(); ++i) index[facts[i]] = static_cast<int>(i);
        value_usage.resize(facts.size());
        occurrence.assign(facts.size(), std::vector<int>(n, 0));
        for (size_t i = 0; i < facts.size(); ++i) {
            for (const std::string& a : facts[i].args) {
                int v = value_id(a);
                value_usage[i] |= (1u << v);
                occurrence[i][v] += 1;
            }
        }
    }
};

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// fact id -> fact id under a renaming of values
std::vector<int> fact_permutation(const FactSpace& space, const std::vector<int>& perm) {
    std::vector<int> out(space.facts.size());
    for (size_t i = 0; i < space.facts.size(); ++i) {
        Fact f{space.facts[i].relation, {}};
        for (const std::string& a : space.facts[i].args)
            f.args.push_back(value_name(perm[value_id(a)]));
        out[i] = space.index.at(f);
    }
    return out;
}

FactMask permute_mask(const FactMask& m, const std::vector<int>& factPerm) {
    FactMask out = empty_mask();
    for (int w = 0; w < 4; ++w) {
        std::uint64_t bits = m[w];
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            set_bit(out, factPerm[w * 64 + b]);
        }
    }
    return out;
}

int count_components(const PointedInstance& e) {
    const auto& facts = e.facts();
    if (facts.empty()) return 0;
    std::set<std::string> dist(e.distinguished().begin(), e.distinguished().end());
    std::vector<int> parent(facts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<std::string, int> firstFact;
    for (size_t i = 0; i < facts.size(); ++i) {
        for (const std::string& a : facts[i].args) {
            if (dist.count(a)) continue;
            auto [it, fresh] = firstFact.try_emplace(a, static_cast<int>(i));
            if (!fresh) parent[find(static_cast<int>(i))] = find(it->second);
        }
    }
    std::set<int> roots;
    for (size_t i = 0; i < facts.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

bool passes_filter(const PointedInstance& e, const EnumFilter& filter) {
    if (filter.max_components && count_components(e) > *filter.max_components) return false;
    if (filter.c_acyclic_only && !is_c_acyclic(e)) return false;
    return true;
}

// Core generator: all fact sets over exactly n values (every value used),
// one canonical representative per isomorphism class, paired with every
// canonical distinguished tuple. Ordered by fact count, then subset, then
// tuple.
bool enumerate_level(const Schema& schema, int arity, int n, const EnumFilter& filter,
                     const std::function<bool(const PointedInstance&)>& consumer) {
    FactSpace space(schema, n);
    int f = static_cast<int>(space.facts.size());
    if (f > kMaxFactSpace)
        throw InvalidParameterError("enumeration fact space too large");
    if (!filter.max_facts && f > 22)
        throw InvalidParameterError(
            "unbounded enumeration over a fact space of size " + std::to_string(f) +
            "; set max_facts");
    auto perms = all_permutations(n);
    std::vector<std::vector<int>> factPerms;
    factPerms.reserve(perms.size());
    for (const auto& p : perms) factPerms.push_back(fact_permutation(space, p));

    int maxCount = filter.max_facts ? std::min(*filter.max_facts, f) : f;
    std::uint32_t allValues = (n == 32) ? ~0u : ((1u << n) - 1);

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(value_name(i));

    for (int c = 1; c <= maxCount; ++c) {
        std::vector<int> pick(c);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::uint32_t used = 0;
            std::vector<int> occ(n, 0);
            FactMask mask = empty_mask();
            for (int fi : pick) {
                used |= space.value_usage[fi];
                for (int v = 0; v < n; ++v) occ[v] += space.occurrence[fi][v];
                set_bit(mask, fi);
            }
            bool degreeOk = true;
            if (filter.max_degree)
                for (int v = 0; v < n; ++v)
                    if (occ[v] > *filter.max_degree) degreeOk = false;

            if (used == allValues && degreeOk) {
                // Canonical masks only; remember the permutations fixing them.
                bool minimal = true;
                std::vector<const std::vector<int>*> stabilizer;
                for (size_t pi = 0; pi < perms.size() && minimal; ++pi) {
                    FactMask pm = permute_mask(mask, factPerms[pi]);
                    int cmp = compare_masks(pm, mask);
                    if (cmp < 0) minimal = false;
                    else if (cmp == 0) stabilizer.push_back(&perms[pi]);
                }
                if (minimal) {
                    std::vector<Fact> facts;
                    for (int fi : pick) facts.push_back(space.facts[fi]);

                    std::vector<int> tuple(arity, 0);
                    while (true) {
                        bool tupleCanonical = true;
                        for (const auto* p : stabilizer) {
                            std::vector<int> t2(arity);
                            for (int i = 0; i < arity; ++i) t2[i] = (*p)[tuple[i]];
                            if (std::lexicographical_compare(t2.begin(), t2.end(),
                                                             tuple.begin(), tuple.end())) {
                                tupleCanonical = false;
                                break;
                            }
                        }
                        if (tupleCanonical) {
                            std::vector<std::string> dist;
                            for (int i : tuple) dist.push_back(names[i]);
                            PointedInstance e(schema, facts, dist);
                            if (passes_filter(e, filter))
                                if (!consumer(e)) return false;
                        }
                        int pos = arity - 1;
                        while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
                        if (pos < 0) break;
                        ++tuple[pos];
                    }
                }
            }
            int pos = c - 1;
            while (pos >= 0 && pick[pos] == f - c + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int q = pos + 1; q < c; ++q) pick[q] = pick[q - 1] + 1;
        }
    }
    return true;
}

} // namespace

void enumerate_instances(const Schema& schema, int arity, int max_values,
                         const std::function<bool(const PointedInstance&)>& consumer,
                         const EnumFilter& filter) {
    if (max_values < 0) throw InvalidParameterError("max_values must be >= 0");
    schema.validate();
    for (int n = 0; n <= max_values; ++n) {
        if (n == 0) {
            if (arity == 0) {
                PointedInstance e(schema, {}, {});
                if (passes_filter(e, filter) && !consumer(e)) return;
            }
            continue;
        }
        if (!enumerate_level(schema, arity, n, filter, consumer)) return;
    }
}

std::vector<PointedInstance> enumerate_instances(const Schema& schema, int arity,
                                                 int max_values, const EnumFilter& filter) {
    std::vector<PointedInstance> out;
    enumerate_instances(schema, arity, max_values,
                        [&](const PointedInstance& e) {
                            out.push_back(e);
                            return true;
                        },
                        filter);
    return out;
}

void enumerate_cqs(const Schema& schema, int arity, int max_vars,
                   const std::function<bool(const ConjunctiveQuery&)>& consumer,
                   const EnumFilter& filter) {
    // A fact set using all its variables makes every tuple safe, so CQ
    // enumeration coincides with instance enumeration over variable names.
    enumerate_instances(schema, arity, max_vars,
                        [&](const PointedInstance& e) {
                            return consumer(ConjunctiveQuery{e});
                        },
                        filter);
}

std::vector<ConjunctiveQuery> enumerate_cqs(const Schema& schema, int arity, int max_vars,
                                            const EnumFilter& filter) {
    std::vector<ConjunctiveQuery> out;
    enumerate_cqs(schema, arity, max_vars,
                  [&](const ConjunctiveQuery& q) {
                      out.push_back(q);
                      return true;
                  },
                  filter);
    return out;
}

namespace {

// Joint iterated color refinement over two instances with one shared
// palette, so equal signatures get equal colors on both sides. Colors are
// seeded from the distinguished positions.
std::pair<std::vector<long>, std::vector<long>> refine_colors(const Indexed& a,
                                                              const Indexed& b) {
    auto seed_of = [](const Indexed& inst) {
        std::vector<std::string> seed(inst.n());
        for (size_t i = 0; i < inst.distinguished.size(); ++i)
            seed[inst.distinguished[i]] += "@" + std::to_string(i);
        return seed;
    };
    std::vector<std::string> seedA = seed_of(a), seedB = seed_of(b);
    std::map<std::string, long> palette;
    auto assign = [&](const std::string& key) {
        auto [it, fresh] = palette.try_emplace(key, static_cast<long>(palette.size()));
        return it->second;
    };
    std::vector<long> ca(a.n()), cb(b.n());
    for (int v = 0; v < a.n(); ++v) ca[v] = assign(seedA[v]);
    for (int v = 0; v < b.n(); ++v) cb[v] = assign(seedB[v]);

    auto signature = [](const Indexed& inst, const std::vector<long>& color, int v) {
        std::vector<std::string> sig;
        sig.push_back("c" + std::to_string(color[v]));
        for (auto [fi, pos] : inst.occurrences[v]) {
            std::string s =
                std::to_string(inst.facts[fi].rel) + ":" + std::to_string(pos) + ":";
            for (int arg : inst.facts[fi].args) s += std::to_string(color[arg]) + ",";
            sig.push_back(std::move(s));
        }
        std::sort(sig.begin() + 1, sig.end());
        std::string out;
        for (const std::string& s : sig) out += s + "|";
        return out;
    };

    int rounds = std::max(a.n(), b.n());
    for (int round = 0; round < rounds; ++round) {
        std::map<std::string, long> next;
        auto reassign = [&](const std::string& key) {
            auto [it, fresh] = next.try_emplace(key, static_cast<long>(next.size()));
            return it->second;
        };
        std::vector<long> na(a.n()), nb(b.n());
        for (int v = 0; v < a.n(); ++v) na[v] = reassign(signature(a, ca, v));
        for (int v = 0; v < b.n(); ++v) nb[v] = reassign(signature(b, cb, v));
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {ca, cb};
}

} // namespace

bool is_isomorphic(const PointedInstance& a, const PointedInstance& b) {
    if (!(a.schema() == b.schema()) || a.arity() != b.arity()) return false;
    if (a.facts().size() != b.facts().size()) return false;
    Indexed ia(a), ib(b);
    if (ia.n() != ib.n()) return false;
    auto [ca, cb] = refine_colors(ia, ib);
    std::multiset<long> ha(ca.begin(), ca.end()), hb(cb.begin(), cb.end());
    if (ha != hb) return false;
    // Distinguished tuples must be identified positionally.
    for (size_t i = 0; i < ia.distinguished.size(); ++i)
        if (ca[ia.distinguished[i]] != cb[ib.distinguished[i]]) return false;
    std::vector<int> map(ia.n(), -1);
    std::vector<char> used(ib.n(), 0);
    for (size_t i = 0; i < ia.distinguished.size(); ++i) {
        int x = ia.distinguished[i], y = ib.distinguished[i];
        if (map[x] >= 0) {
            if (map[x] != y) return false;
            continue;
        }
        if (used[y]) return false;
        map[x] = y;
        used[y] = 1;
    }
    // Re-run the backtracking respecting pre-pinned distinguished values.
    std::function<bool(int)> rec = [&](int next) -> bool {
        while (next < ia.n() && map[next] >= 0) ++next;
        if (next == ia.n()) {
            std::set<std::pair<int, std::vector<int>>> fa, fb;
            for (const auto& f : ia.facts) {
                std::vector<int> args;
                for (int x : f.args) args.push_back(map[x]);
                fa.insert({f.rel, args});
            }
            for (const auto& f : ib.facts) fb.insert({f.rel, f.args});
            return fa == fb;
        }
        for (int w = 0; w < ib.n(); ++w) {
            if (used[w] || cb[w] != ca[next]) continue;
            map[next] = w;
            used[w] = 1;
            bool ok = true;
            for (auto [fi, pos] : ia.occurrences[next]) {
                const auto& args = ia.facts[fi].args;
                bool complete = true;
                for (int x : args)
                    if (map[x] < 0) { complete = false; break; }
                if (!complete) continue;
                std::vector<int> image;
                for (int x : args) image.push_back(map[x]);
                bool found = false;
                for (int gi : ib.facts_by_rel[ia.facts[fi].rel])
                    if (ib.facts[gi].args == image) { found = true; break; }
                if (!found) { ok = false; break; }
            }
            if (ok && rec(next + 1)) return true;
            used[w] = 0;
            map[next] = -1;
        }
        return false;
    };
    return rec(0);
}

bool brute_check_duality(const DualitySide& f, const DualitySide& d, int max_values,
                         const std::optional<PointedInstance>& p, const Options& opts) {
    const PointedInstance* sample = nullptr;
    if (!d.examples.empty()) sample = &d.examples.front();
    else if (!f.examples.empty()) sample = &f.examples.front();
    else if (p) sample = &*p;
    else throw InvalidParameterError("brute_check_duality: no schema available");
    const Schema& schema = sample->schema();
    int arity = sample->arity();

    bool holds = true;
    enumerate_instances(schema, arity, max_values, [&](const PointedInstance& x) {
        if (p && !homomorphic(x, *p, opts)) return true;
        bool mapsToD = false;
        for (const PointedInstance& e : d.examples)
            if (homomorphic(x, e, opts)) { mapsToD = true; break; }
        bool avoidedByF = true;
        for (const PointedInstance& e : f.examples)
            if (homomorphic(e, x, opts)) { avoidedByF = false; break; }
        if (mapsToD != avoidedByF) {
            holds = false;
            return false;
        }
        return true;
    });
    return holds;
}

PointedInstance directed_cycle(int n) {
    if (n < 1) throw InvalidParameterError("directed_cycle: n >= 1");
    Schema s{{{"R", 2}}};
    std::vector<Fact> facts;
    for (int i = 0; i < n; ++i)
        facts.push_back({"R", {std::to_string(i), std::to_string((i + 1) % n)}});
    return PointedInstance(s, std::move(facts), {});
}

PointedInstance clique(int n) {
    if (n < 1) throw InvalidParameterError("clique: n >= 1");
    Schema s{{{"R", 2}}};
    std::vector<Fact> facts;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) facts.push_back({"R", {std::to_string(i), std::to_string(j)}});
    return PointedInstance(s, std::move(facts), {});
}

PointedInstance directed_path(int edges) {
    if (edges < 1) throw InvalidParameterError("directed_path: edges >= 1");
    Schema s{{{"R", 2}}};
    std::vector<Fact> facts;
    for (int i = 0; i < edges; ++i)
        facts.push_back({"R", {std::to_string(i), std::to_string(i + 1)}});
    return PointedInstance(s, std::move(facts), {});
}

PointedInstance transitive_tournament(int n) {
    if (n < 1) throw InvalidParameterError("transitive_tournament: n >= 1");
    Schema s{{{"R", 2}}};
    std::vector<Fact> facts;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            facts.push_back({"R", {std::to_string(i), std::to_string(j)}});
    return PointedInstance(s, std::move(facts), {});
}

namespace {

std::vector<int> first_primes(int n) {
    std::vector<int> primes;
    for (int candidate = 2; static_cast<int>(primes.size()) < n; ++candidate) {
        bool prime = true;
        for (int p : primes)
            if (candidate % p == 0) { prime = false; break; }
        if (prime) primes.push_back(candidate);
    }
    return primes;
}

} // namespace

LabeledExamples prime_cycle_examples(int n) {
    if (n < 2) throw InvalidParameterError("prime_cycle_examples: n >= 2");
    auto primes = first_primes(n);
    LabeledExamples e;
    e.schema = Schema{{{"R", 2}}};
    e.arity = 0;
    for (int i = 1; i < n; ++i) e.positives.push_back(directed_cycle(primes[i]));
    e.negatives.push_back(directed_cycle(primes[0]));
    return e;
}

LabeledExamples tree_lower_bound(int n) {
    if (n < 1) throw InvalidParameterError("tree_lower_bound: n >= 1");
    Schema s{{{"A", 1}, {"L", 2}, {"R", 2}}};
    auto doubled_cycle = [&](int j) {
        std::vector<Fact> facts;
        for (int k = 0; k + 1 < j; ++k) {
            facts.push_back({"R", {std::to_string(k), std::to_string(k + 1)}});
            facts.push_back({"L", {std::to_string(k), std::to_string(k + 1)}});
        }
        facts.push_back({"R", {std::to_string(j - 1), "0"}});
        facts.push_back({"L", {std::to_string(j - 1), "0"}});
        facts.push_back({"A", {std::to_string(j - 1)}});
        return PointedInstance(s, std::move(facts), {"0"});
    };

    LabeledExamples e;
    e.schema = s;
    e.arity = 1;
    auto primes = first_primes(n);
    for (int p : primes) e.positives.push_back(doubled_cycle(p));

    std::vector<std::string> low = {"00", "01", "10"};
    std::vector<Fact> facts;
    for (const std::string& a : low) {
        facts.push_back({"R", {"00", a}});
        facts.push_back({"L", {"00", a}});
        facts.push_back({"R", {"10", a}});
        facts.push_back({"L", {"01", a}});
        facts.push_back({"R", {"b", a}});
        facts.push_back({"L", {"b", a}});
    }
    facts.push_back({"L", {"10", "11"}});
    facts.push_back({"R", {"01", "11"}});
    facts.push_back({"R", {"b", "b"}});
    facts.push_back({"L", {"b", "b"}});
    facts.push_back({"A", {"b"}});
    facts.push_back({"L", {"11", "11"}});
    facts.push_back({"R", {"11", "11"}});
    facts.push_back({"A", {"11"}});
    for (const std::string& a : low)
        e.negatives.push_back(PointedInstance(s, facts, {a}));
    return e;
}

LabeledExamples unit_examples(const std::string& name) {
    if (name == "sec3.2") {
        Schema s{{{"R", 3}, {"P", 1}}};
        LabeledExamples e;
        e.schema = s;
        e.arity = 0;
        e.positives.push_back(PointedInstance(s, {{"R", {"a", "a", "b"}}, {"P", {"a"}}}, {}));
        e.positives.push_back(PointedInstance(s, {{"R", {"c", "d", "d"}}, {"P", {"c"}}}, {}));
        e.negatives.push_back(PointedInstance(s, {}, {}));
        return e;
    }
    if (name.rfind("sec3.3-item", 0) == 0) {
        Schema s{{{"R", 2}, {"P", 1}, {"Q", 1}}};
        PointedInstance k2(s, {{"R", {"a", "b"}}, {"R", {"b", "a"}}}, {});
        PointedInstance iP(s, {{"P", {"a"}}}, {});
        PointedInstance iQ(s, {{"Q", {"a"}}}, {});
        PointedInstance iPQ(s, {{"P", {"a"}}, {"Q", {"a"}}}, {});
        LabeledExamples e;
        e.schema = s;
        e.arity = 0;
        if (name == "sec3.3-item1") e.negatives = {iPQ};
        else if (name == "sec3.3-item2") e.negatives = {iP, iQ};
        else if (name == "sec3.3-item3") e.negatives = {k2};
        else if (name == "sec3.3-item4") e.negatives = {k2, iP, iQ};
        else throw InvalidParameterError("unknown fixture '" + name + "'");
        return e;
    }
    if (name == "sec3.4-unique") {
        Schema s{{{"R", 2}}};
        std::vector<Fact> facts = {{"R", {"a", "b"}}, {"R", {"b", "a"}}, {"R", {"b", "b"}}};
        LabeledExamples e;
        e.schema = s;
        e.arity = 1;
        e.positives.push_back(PointedInstance(s, facts, {"b"}));
        e.negatives.push_back(PointedInstance(s, facts, {"a"}));
        return e;
    }
    if (name == "sec4") {
        Schema s{{{"P", 1}, {"Q", 1}, {"R", 1}}};
        LabeledExamples e;
        e.schema = s;
        e.arity = 0;
        e.positives.push_back(PointedInstance(s, {{"P", {"a"}}, {"Q", {"a"}}}, {}));
        e.positives.push_back(PointedInstance(s, {{"P", {"a"}}, {"R", {"a"}}}, {}));
        e.negatives.push_back(PointedInstance(s, {{"P", {"a"}}}, {}));
        e.negatives.push_back(PointedInstance(s, {{"Q", {"a"}}, {"R", {"a"}}}, {}));
        return e;
    }
    if (name == "sec5.2") {
        Schema s{{{"R", 2}}};
        LabeledExamples e;
        e.schema = s;
        e.arity = 1;
        e.positives.push_back(PointedInstance(s, {{"R", {"a", "a"}}}, {"a"}));
        return e;
    }
    if (name == "sec5.3") {
        Schema s{{{"R", 2}, {"P", 1}}};
        LabeledExamples e;
        e.schema = s;
        e.arity = 1;
        e.negatives.push_back(PointedInstance(s, {{"P", {"a0"}}}, {"a0"}));
        e.negatives.push_back(PointedInstance(s, {{"R", {"a0", "a0"}}}, {"a0"}));
        return e;
    }
    if (name == "ghrv") {
        LabeledExamples e;
        e.schema = Schema{{{"R", 2}}};
        e.arity = 0;
        e.positives.push_back(directed_path(3));
        e.negatives.push_back(transitive_tournament(3));
        return e;
    }
    throw InvalidParameterError("unknown fixture '" + name + "'");
}

Fixture gen_fixture(const std::string& name) {
    auto parse_param = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix + ":", 0) != 0) return std::nullopt;
        try {
            return std::stoi(name.substr(prefix.size() + 1));
        } catch (...) {
            throw InvalidParameterError("bad parameter in fixture '" + name + "'");
        }
    };
    if (auto n = parse_param("cycle")) return directed_cycle(*n);
    if (auto n = parse_param("clique")) return clique(*n);
    if (auto n = parse_param("path")) return directed_path(*n);
    if (auto n = parse_param("tournament")) return transitive_tournament(*n);
    if (auto n = parse_param("prime-cycles")) return prime_cycle_examples(*n);
    if (auto n = parse_param("tree-lower-bound")) return tree_lower_bound(*n);
    return unit_examples(name);
}

std::vector<std::string> fixture_names() {
    return {"cycle:N",      "clique:N",      "path:N",        "tournament:N",
            "prime-cycles:N", "tree-lower-bound:N", "sec3.2",  "sec3.3-item1",
            "sec3.3-item2", "sec3.3-item3",  "sec3.3-item4",  "sec3.4-unique",
            "sec4",         "sec5.2",        "sec5.3",        "ghrv"};
}

} // namespace fitcq::oracle
