#include "fitcq/cqfit.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fitcq/document.hpp"

namespace fitcq {
namespace {

void require_query_matches(const ConjunctiveQuery& q, const LabeledExamples& examples) {
    require_same_schema(q.schema(), examples.schema);
    if (q.arity() != examples.arity)
        throw ArityMismatchError("query arity " + std::to_string(q.arity()) +
                                 " does not match example arity " +
                                 std::to_string(examples.arity));
}

bool fits(const ConjunctiveQuery& q, const LabeledExamples& examples, const Options& opts) {
    for (const PointedInstance& e : examples.positives)
        if (!homomorphic(q.body, e, opts)) return false;
    for (const PointedInstance& e : examples.negatives)
        if (homomorphic(q.body, e, opts)) return false;
    return true;
}

bool weakly_most_general(const ConjunctiveQuery& q, const LabeledExamples& examples,
                         const Options& opts) {
    if (!fits(q, examples, opts)) return false;
    Frontier f;
    try {
        f = frontier(q, opts);
    } catch (const FrontierNotExistsError&) {
        return false;
    }
    for (const ConjunctiveQuery& member : f.members) {
        bool reachesNegative = false;
        for (const PointedInstance& e : examples.negatives)
            if (homomorphic(member.body, e, opts)) { reachesNegative = true; break; }
        if (!reachesNegative) return false;
    }
    return true;
}

} // namespace

PointedInstance positive_product(const LabeledExamples& examples, const Options& opts) {
    return direct_product(examples.schema, examples.arity, examples.positives, opts);
}

bool verify_fitting_cq(const ConjunctiveQuery& q, const LabeledExamples& examples,
                       const Options& opts) {
    require_query_matches(q, examples);
    return fits(q, examples, opts);
}

bool verify_extremal_cq(FittingKind kind, const ConjunctiveQuery& q,
                        const LabeledExamples& examples, const Options& opts) {
    require_query_matches(q, examples);
    switch (kind) {
    case FittingKind::Any:
        return fits(q, examples, opts);
    case FittingKind::MostSpecific:
        return fits(q, examples, opts) &&
               hom_equivalent(q.body, positive_product(examples, opts), opts);
    case FittingKind::WeaklyMostGeneral:
        return weakly_most_general(q, examples, opts);
    case FittingKind::Unique:
        return verify_extremal_cq(FittingKind::MostSpecific, q, examples, opts) &&
               weakly_most_general(q, examples, opts);
    }
    throw InvalidParameterError("unknown fitting kind");
}

SearchOutcome exists_fitting_cq(const LabeledExamples& examples, const Options& opts) {
    PointedInstance p = positive_product(examples, opts);
    if (!p.distinguished_in_adom()) return SearchOutcome::not_exists();
    ConjunctiveQuery q = canonical_cq(p);
    if (!fits(q, examples, opts)) return SearchOutcome::not_exists();
    return SearchOutcome::found(std::move(q));
}

SearchOutcome construct_most_specific_cq(const LabeledExamples& examples,
                                         const Options& opts) {
    PointedInstance p = positive_product(examples, opts);
    if (!p.distinguished_in_adom()) return SearchOutcome::not_exists();
    ConjunctiveQuery q = canonical_cq(compute_core(p, opts));
    if (!fits(q, examples, opts)) return SearchOutcome::not_exists();
    return SearchOutcome::found(std::move(q));
}

SearchOutcome exists_unique_cq(const LabeledExamples& examples, const Options& opts) {
    PointedInstance p = positive_product(examples, opts);
    if (!p.distinguished_in_adom()) return SearchOutcome::not_exists();
    ConjunctiveQuery q = canonical_cq(compute_core(p, opts));
    if (!fits(q, examples, opts)) return SearchOutcome::not_exists();
    if (!weakly_most_general(q, examples, opts)) return SearchOutcome::not_exists();
    return SearchOutcome::found(std::move(q));
}

bool exists_basis_cq(const LabeledExamples& examples, const Options& opts) {
    return relativized_duality_exists(DualitySide{examples.negatives},
                                      positive_product(examples, opts), opts);
}

SearchOutcome construct_basis_cq(const LabeledExamples& examples, int size_cap,
                                 const Options& opts) {
    PointedInstance p = compute_core(positive_product(examples, opts), opts);
    if (!relativized_duality_exists(DualitySide{examples.negatives}, p, opts))
        return SearchOutcome::not_exists();
    DualitySide f =
        relativized_duality_construct(DualitySide{examples.negatives}, p, size_cap, opts);

    std::vector<ConjunctiveQuery> kept;
    for (const PointedInstance& member : f.examples) {
        if (!member.distinguished_in_adom()) continue; // unsafe, not a CQ
        ConjunctiveQuery q = canonical_cq(compute_core(member, opts));
        if (!fits(q, examples, opts)) continue;
        bool dup = false;
        for (ConjunctiveQuery& other : kept) {
            if (hom_equivalent(q.body, other.body, opts)) {
                dup = true;
                if (serialize(q) < serialize(other)) other = q;
                break;
            }
        }
        if (!dup) kept.push_back(std::move(q));
    }
    if (kept.empty()) return SearchOutcome::not_exists();

    std::vector<ConjunctiveQuery> minimal;
    for (size_t i = 0; i < kept.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < kept.size() && !redundant; ++j)
            if (i != j && homomorphic(kept[j].body, kept[i].body, opts)) redundant = true;
        if (!redundant) minimal.push_back(kept[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
        return serialize(a) < serialize(b);
    });
    if (!verify_basis_cq(minimal, examples, opts))
        throw CapTooSmallError("constructed basis fails verification; raise the size cap");
    return SearchOutcome::found_set(std::move(minimal));
}

bool verify_basis_cq(const std::vector<ConjunctiveQuery>& qs,
                     const LabeledExamples& examples, const Options& opts) {
    for (const ConjunctiveQuery& q : qs) {
        require_query_matches(q, examples);
        if (!fits(q, examples, opts)) return false;
    }
    // Normalize to pairwise-incomparable cores; dropping a query into which a
    // kept one maps preserves the covered set.
    std::vector<PointedInstance> members;
    for (const ConjunctiveQuery& q : qs) members.push_back(compute_core(q.body, opts));
    {
        std::vector<PointedInstance> unique;
        for (const PointedInstance& e : members) {
            bool dup = false;
            for (const PointedInstance& u : unique)
                if (hom_equivalent(e, u, opts)) { dup = true; break; }
            if (!dup) unique.push_back(e);
        }
        std::vector<PointedInstance> minimal;
        for (size_t i = 0; i < unique.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < unique.size() && !redundant; ++j)
                if (i != j && homomorphic(unique[j], unique[i], opts)) redundant = true;
            if (!redundant) minimal.push_back(unique[i]);
        }
        members = std::move(minimal);
    }
    for (const PointedInstance& e : members)
        if (!is_c_acyclic(e)) return false;

    std::vector<DualitySide> duals;
    for (const PointedInstance& e : members)
        duals.push_back(single_obstruction_dual(e, opts));

    PointedInstance p = compute_core(positive_product(examples, opts), opts);
    std::vector<int> pick(duals.size(), 0);
    while (true) {
        std::vector<PointedInstance> factors;
        for (size_t i = 0; i < duals.size(); ++i) factors.push_back(duals[i].examples[pick[i]]);
        PointedInstance d = direct_product(examples.schema, examples.arity, factors, opts);
        PointedInstance dp = direct_product(d, p, opts);
        bool covered = false;
        for (const PointedInstance& e : examples.negatives)
            if (homomorphic(dp, e, opts)) { covered = true; break; }
        if (!covered) return false;
        int pos = static_cast<int>(duals.size()) - 1;
        while (pos >= 0 && pick[pos] + 1 == (int)duals[pos].examples.size()) pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    return true;
}

// ---------------------------------------------------------------------------
// Search for weakly most-general fitting CQs

namespace {

// Dedicated generator for c-acyclic candidates: grows fact sets in
// lexicographic order with monotone pruning (c-acyclicity and degree only
// degrade when facts are added), iterating variable count first and fact
// count second. Isomorphic duplicates are admitted; they only cost time.
class CandidateGenerator {
public:
    CandidateGenerator(const Schema& schema, int arity, int maxDegree, int maxComponents)
        : schema_(schema), arity_(arity), maxDegree_(maxDegree),
          maxComponents_(maxComponents) {}

    bool run(int max_vars, const std::function<bool(const ConjunctiveQuery&)>& consumer) {
        for (int n = (arity_ == 0 ? 0 : 1); n <= max_vars; ++n) {
            vars_.clear();
            for (int i = 0; i < n; ++i)
                vars_.push_back(i < 26 ? std::string(1, char('a' + i))
                                       : "v" + std::to_string(i));
            build_fact_space(n);
            int maxFacts = maxDegree_ > 0 ? n * maxDegree_ : 0;
            if (n == 0) maxFacts = 0;
            for (int c = (n == 0 ? 0 : 1); c <= maxFacts || (n == 0 && c == 0); ++c) {
                current_.clear();
                if (!grow(0, c, n, consumer)) return false;
                if (n == 0) break;
            }
        }
        return true;
    }

private:
    void build_fact_space(int n) {
        space_.clear();
        for (const auto& [rel, arity] : schema_.relations) {
            std::vector<int> idx(arity, 0);
            while (n > 0) {
                Fact f{rel, {}};
                for (int i : idx) f.args.push_back(vars_[i]);
                space_.push_back(std::move(f));
                int pos = arity - 1;
                while (pos >= 0 && idx[pos] == n - 1) idx[pos--] = 0;
                if (pos < 0) break;
                ++idx[pos];
            }
        }
        std::sort(space_.begin(), space_.end());
    }

    bool emit(int n, const std::function<bool(const ConjunctiveQuery&)>& consumer) {
        std::set<std::string> used;
        for (const Fact& f : current_)
            used.insert(f.args.begin(), f.args.end());
        if ((int)used.size() != n) return true;
        // Every distinguished tuple over the variables; all variables being
        // used keeps the query safe.
        std::vector<int> tuple(arity_, 0);
        while (true) {
            std::vector<std::string> d;
            for (int i : tuple) d.push_back(vars_[i]);
            PointedInstance body(schema_, current_, d);
            if (count_ok(body) && is_c_acyclic(body))
                if (!consumer(ConjunctiveQuery{body})) return false;
            int pos = arity_ - 1;
            while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
        return true;
    }

    bool count_ok(const PointedInstance& body) const {
        if (maxComponents_ < 0) return true;
        std::set<std::string> dist(body.distinguished().begin(), body.distinguished().end());
        // fg-components: facts connected through shared non-distinguished values
        std::vector<int> parent(body.facts().size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::map<std::string, int> firstFact;
        for (size_t i = 0; i < body.facts().size(); ++i)
            for (const std::string& a : body.facts()[i].args) {
                if (dist.count(a)) continue;
                auto [it, fresh] = firstFact.try_emplace(a, (int)i);
                if (!fresh) parent[find((int)i)] = find(it->second);
            }
        std::set<int> roots;
        for (size_t i = 0; i < body.facts().size(); ++i) roots.insert(find((int)i));
        return (int)roots.size() <= maxComponents_;
    }

    bool grow(int from, int remaining, int n,
              const std::function<bool(const ConjunctiveQuery&)>& consumer) {
        if (remaining == 0) return emit(n, consumer);
        std::set<std::string> used;
        for (const Fact& f : current_)
            used.insert(f.args.begin(), f.args.end());
        int maxArity = 1;
        for (const auto& [rel, a] : schema_.relations) maxArity = std::max(maxArity, a);
        if ((int)used.size() + remaining * maxArity < n) return true; // cannot cover

        for (int i = from; i < (int)space_.size(); ++i) {
            current_.push_back(space_[i]);
            if (degree_ok() && forest_ok()) {
                if (!grow(i + 1, remaining - 1, n, consumer)) return false;
            }
            current_.pop_back();
        }
        return true;
    }

    bool degree_ok() const {
        if (maxDegree_ < 0) return true;
        std::map<std::string, int> occ;
        for (const Fact& f : current_)
            for (const std::string& a : f.args) ++occ[a];
        for (const auto& [v, c] : occ)
            if (c > maxDegree_) return false;
        return true;
    }

    // With arity 0 no value can be distinguished, so any incidence cycle is
    // fatal and prunes the branch. For arity >= 1 the tuple chosen at
    // emission decides which cycles are legal, so no pruning happens here.
    bool forest_ok() const {
        if (arity_ != 0) return true;
        return is_c_acyclic(PointedInstance(schema_, current_, {}));
    }

    Schema schema_;
    int arity_;
    int maxDegree_;
    int maxComponents_;
    std::vector<std::string> vars_;
    std::vector<Fact> space_;
    std::vector<Fact> current_;
};

} // namespace

SearchOutcome search_weakly_most_general_cq(const LabeledExamples& examples, int size_cap,
                                            const Options& opts) {
    if (size_cap < 0) throw InvalidParameterError("size_cap must be >= 0");
    int degreeBound = 0;
    for (const PointedInstance& e : examples.negatives)
        degreeBound += static_cast<int>(e.facts().size());
    int componentBound = static_cast<int>(examples.negatives.size());

    CandidateGenerator gen(examples.schema, examples.arity, degreeBound, componentBound);
    SearchOutcome result = SearchOutcome::not_up_to_cap(size_cap);
    gen.run(size_cap, [&](const ConjunctiveQuery& q) {
        if (verify_extremal_cq(FittingKind::WeaklyMostGeneral, q, examples, opts)) {
            result = SearchOutcome::found(q);
            return false;
        }
        return true;
    });
    return result;
}

} // namespace fitcq
