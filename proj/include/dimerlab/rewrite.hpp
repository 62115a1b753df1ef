#pragma once

#include "dimerlab/quiver.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dimerlab {

struct SearchBudget {
    /// Longest intermediate path explored; 0 selects the default
    /// 2 * (longest relation side) + max(|p|, |q|).
    std::size_t max_length = 0;
    std::size_t max_visited = 1'000'000;
};

enum class Outcome { Equal, Distinct, Unknown };
std::string_view to_string(Outcome o);

/// Replace the occurrence of one side of `relation` starting at `position`;
/// direction +1 rewrites plus -> minus, -1 rewrites minus -> plus.
struct RewriteStep {
    std::size_t position = 0;
    int relation = -1;
    int direction = 1;

    bool operator==(const RewriteStep&) const = default;
};

struct RewriteSite {
    RewriteStep step;
    Path result;
};

struct EqualityVerdict {
    Outcome outcome = Outcome::Unknown;
    std::vector<RewriteStep> certificate; // Equal: replays p into q
    std::string reason;                   // Distinct: separating invariant; Unknown: exhausted budget
    std::size_t visited = 0;
};

/// Arrow-count vectors modulo the lattice spanned by (plus - minus) over all
/// relations, reduced to a canonical coset representative.
class AbelianInvariant {
public:
    AbelianInvariant(std::size_t arrow_count, const RelationSet& relations);

    std::vector<long long> residue(const Path& p) const;
    std::vector<long long> residue(std::vector<long long> counts) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t arrows_;
    std::vector<std::vector<long long>> rows_; // echelon form, positive pivots
    std::vector<std::size_t> pivots_;
};

/// Every place where either side of a relation occurs in p, with the result of
/// substituting the other side.
std::vector<RewriteSite> rewrite_sites(const Path& p, const RelationSet& relations);

Path apply_step(const Path& p, const RewriteStep& step, const RelationSet& relations);
/// True when the certificate turns p into q step by step.
bool replay(const Path& p, const Path& q, const std::vector<RewriteStep>& certificate,
            const RelationSet& relations);

/// The set of paths reachable from a start path, as far as the budget allowed.
struct ClassClosure {
    std::vector<Path> members; // breadth-first order, start first
    bool complete = false;     // false when the length cap or visit budget cut the search
    bool stopped = false;      // the stop predicate accepted a member; members end with it
};

/// Rewriting engine over a fixed quiver and relation set. Owns the relation
/// index and the abelian invariant; queries are const and independent.
class RewriteSystem {
public:
    RewriteSystem(const QuiverWithFaces& quiver, RelationSet relations);

    const QuiverWithFaces& quiver() const { return *quiver_; }
    const RelationSet& relations() const { return relations_; }
    const AbelianInvariant& abelian() const { return abelian_; }

    std::vector<RewriteSite> sites(const Path& p) const;
    EqualityVerdict equal(const Path& p, const Path& q, SearchBudget budget = {}) const;
    /// Breadth-first class of p. A zero length cap means no cap: equal paths
    /// carry equal face weight, so classes are finite.
    ClassClosure closure(const Path& p, SearchBudget budget = {},
                         const std::function<bool(const Path&)>& stop = nullptr) const;

private:
    using Key = std::u16string;
    Key key(const Path& p) const;
    Path from_key(const Key& k, int vertex) const;
    void expand(const Key& k, const std::function<void(Key, RewriteStep)>& emit) const;

    const QuiverWithFaces* quiver_;
    RelationSet relations_;
    AbelianInvariant abelian_;
    // first arrow of a relation side -> (relation, direction)
    std::vector<std::vector<std::pair<int, int>>> by_first_;
};

EqualityVerdict paths_equal(const Path& p, const Path& q, const RelationSet& relations,
                            const QuiverWithFaces& quiver, SearchBudget budget = {});

std::vector<long long> abelian_invariant(const Path& p, const RelationSet& relations,
                                         const QuiverWithFaces& quiver);

} // namespace dimerlab
