#include "dimerlab/rewrite.hpp"

#include "dimerlab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <limits>
#include <optional>
#include <unordered_set>

namespace dimerlab {

std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::Equal: return "equal";
    case Outcome::Distinct: return "distinct";
    case Outcome::Unknown: return "unknown";
    }
    return "?";
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void check_magnitude(long long v) {
    if (std::llabs(v) > (1LL << 60)) throw Error(ErrorKind::MalformedQuiver, "abelian lattice entries overflow");
}

std::vector<long long> arrow_counts(const Path& p, std::size_t arrows) {
    std::vector<long long> v(arrows, 0);
    for (int a : p.arrows) ++v[static_cast<std::size_t>(a)];
    return v;
}

} // namespace

AbelianInvariant::AbelianInvariant(std::size_t arrow_count, const RelationSet& relations) : arrows_(arrow_count) {
    std::vector<std::vector<long long>> rows;
    for (const auto& r : relations.relations) {
        auto v = arrow_counts(r.plus, arrows_);
        for (int a : r.minus.arrows) --v[static_cast<std::size_t>(a)];
        if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; })) rows.push_back(std::move(v));
    }
    // Integer row echelon form by repeated Euclidean elimination per column.
    std::size_t top = 0;
    for (std::size_t col = 0; col < arrows_ && top < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r][col] != 0 && (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
                    best = r;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool cleared = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                long long f = rows[r][col] / rows[top][col];
                for (std::size_t c = col; c < arrows_; ++c) {
                    rows[r][c] -= f * rows[top][c];
                    check_magnitude(rows[r][c]);
                }
                if (rows[r][col] != 0) cleared = false;
            }
            if (cleared) {
                if (rows[top][col] < 0)
                    for (auto& x : rows[top]) x = -x;
                pivots_.push_back(col);
                rows_.push_back(rows[top]);
                ++top;
                break;
            }
        }
    }
}

std::vector<long long> AbelianInvariant::residue(const Path& p) const { return residue(arrow_counts(p, arrows_)); }

std::vector<long long> AbelianInvariant::residue(std::vector<long long> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t c = pivots_[i];
        long long f = floor_div(v[c], rows_[i][c]);
        if (f == 0) continue;
        for (std::size_t j = c; j < arrows_; ++j) {
            v[j] -= f * rows_[i][j];
            check_magnitude(v[j]);
        }
    }
    return v;
}

namespace {

const Path& side_of(const Relation& r, int direction) { return direction > 0 ? r.plus : r.minus; }

bool occurs_at(const std::vector<int>& arrows, std::size_t pos, const Path& side) {
    if (side.arrows.empty() || pos + side.arrows.size() > arrows.size()) return false;
    return std::equal(side.arrows.begin(), side.arrows.end(), arrows.begin() + static_cast<long>(pos));
}

} // namespace

Path apply_step(const Path& p, const RewriteStep& step, const RelationSet& relations) {
    if (step.relation < 0 || step.relation >= static_cast<int>(relations.relations.size()))
        throw Error(ErrorKind::MalformedQuiver, "relation index out of range");
    const auto& rel = relations.relations[step.relation];
    const Path& from = side_of(rel, step.direction);
    const Path& to = side_of(rel, -step.direction);
    if (!occurs_at(p.arrows, step.position, from))
        throw Error(ErrorKind::MalformedQuiver, "rewrite step does not match at position " +
                                                    std::to_string(step.position));
    Path out{p.source, p.target, {}};
    out.arrows.assign(p.arrows.begin(), p.arrows.begin() + static_cast<long>(step.position));
    out.arrows.insert(out.arrows.end(), to.arrows.begin(), to.arrows.end());
    out.arrows.insert(out.arrows.end(), p.arrows.begin() + static_cast<long>(step.position + from.length()),
                      p.arrows.end());
    return out;
}

bool replay(const Path& p, const Path& q, const std::vector<RewriteStep>& certificate,
            const RelationSet& relations) {
    Path cur = p;
    try {
        for (const auto& step : certificate) cur = apply_step(cur, step, relations);
    } catch (const Error&) {
        return false;
    }
    return cur == q;
}

std::vector<RewriteSite> rewrite_sites(const Path& p, const RelationSet& relations) {
    std::vector<RewriteSite> out;
    for (std::size_t pos = 0; pos < p.arrows.size(); ++pos)
        for (int r = 0; r < static_cast<int>(relations.relations.size()); ++r)
            for (int dir : {1, -1})
                if (occurs_at(p.arrows, pos, side_of(relations.relations[r], dir))) {
                    RewriteStep step{pos, r, dir};
                    out.push_back({step, apply_step(p, step, relations)});
                }
    return out;
}

RewriteSystem::RewriteSystem(const QuiverWithFaces& quiver, RelationSet relations)
    : quiver_(&quiver), relations_(std::move(relations)), abelian_(quiver.arrows.size(), relations_),
      by_first_(quiver.arrows.size()) {
    if (quiver.arrows.size() >= 0xFFFF) throw Error(ErrorKind::MalformedQuiver, "too many arrows");
    for (int r = 0; r < static_cast<int>(relations_.relations.size()); ++r)
        for (int dir : {1, -1}) {
            const Path& s = side_of(relations_.relations[r], dir);
            if (!s.arrows.empty()) by_first_[s.arrows.front()].emplace_back(r, dir);
        }
}

std::vector<RewriteSite> RewriteSystem::sites(const Path& p) const {
    std::vector<RewriteSite> out;
    expand(key(p), [&](Key k, RewriteStep step) { out.push_back({step, from_key(k, p.source)}); });
    for (auto& s : out) s.result.target = p.target;
    return out;
}

RewriteSystem::Key RewriteSystem::key(const Path& p) const {
    Key k;
    k.reserve(p.arrows.size());
    for (int a : p.arrows) k.push_back(static_cast<char16_t>(a));
    return k;
}

Path RewriteSystem::from_key(const Key& k, int vertex) const {
    Path p{vertex, vertex, {}};
    for (char16_t c : k) p.arrows.push_back(static_cast<int>(c));
    if (!p.arrows.empty()) {
        p.source = quiver_->arrows[p.arrows.front()].source;
        p.target = quiver_->arrows[p.arrows.back()].target;
    }
    return p;
}

void RewriteSystem::expand(const Key& k, const std::function<void(Key, RewriteStep)>& emit) const {
    for (std::size_t pos = 0; pos < k.size(); ++pos)
        for (auto [r, dir] : by_first_[static_cast<std::size_t>(k[pos])]) {
            const auto& rel = relations_.relations[r];
            const Path& from = side_of(rel, dir);
            const Path& to = side_of(rel, -dir);
            if (pos + from.length() > k.size()) continue;
            bool match = true;
            for (std::size_t i = 1; match && i < from.length(); ++i)
                match = static_cast<int>(k[pos + i]) == from.arrows[i];
            if (!match) continue;
            Key next = k.substr(0, pos);
            for (int a : to.arrows) next.push_back(static_cast<char16_t>(a));
            next.append(k, pos + from.length());
            emit(std::move(next), RewriteStep{pos, r, dir});
        }
}

EqualityVerdict RewriteSystem::equal(const Path& p, const Path& q, SearchBudget budget) const {
    if (p.source != q.source || p.target != q.target)
        throw Error(ErrorKind::IncomparablePaths, "paths " + to_string(*quiver_, p) + " and " +
                                                      to_string(*quiver_, q) + " have different endpoints");
    EqualityVerdict verdict;
    Key kp = key(p), kq = key(q);
    if (kp == kq) {
        verdict.outcome = Outcome::Equal;
        return verdict;
    }
    if (budget.max_visited == 0) {
        verdict.reason = "visited budget 0";
        return verdict;
    }
    if (abelian_.residue(p) != abelian_.residue(q)) {
        verdict.outcome = Outcome::Distinct;
        verdict.reason = "abelian-invariant";
        return verdict;
    }
    std::size_t cap = budget.max_length != 0 ? budget.max_length
                                             : 2 * relations_.max_side() + std::max(p.length(), q.length());

    struct Side {
        std::unordered_map<Key, std::pair<Key, RewriteStep>> parent;
        std::vector<Key> frontier;
        bool pruned = false;
    };
    Side sides[2];
    sides[0].parent.emplace(kp, std::pair{Key{}, RewriteStep{}});
    sides[0].frontier.push_back(kp);
    sides[1].parent.emplace(kq, std::pair{Key{}, RewriteStep{}});
    sides[1].frontier.push_back(kq);

    auto certificate = [&](const Key& meet) {
        std::vector<RewriteStep> forward;
        for (Key cur = meet; cur != kp;) {
            const auto& [par, step] = sides[0].parent.at(cur);
            forward.push_back(step);
            cur = par;
        }
        std::reverse(forward.begin(), forward.end());
        for (Key cur = meet; cur != kq;) {
            const auto& [par, step] = sides[1].parent.at(cur);
            forward.push_back({step.position, step.relation, -step.direction});
            cur = par;
        }
        return forward;
    };

    while (true) {
        verdict.visited = sides[0].parent.size() + sides[1].parent.size();
        for (int s = 0; s < 2; ++s)
            if (sides[s].frontier.empty()) {
                if (sides[s].pruned) {
                    verdict.outcome = Outcome::Unknown;
                    verdict.reason = "length cap " + std::to_string(cap);
                } else {
                    verdict.outcome = Outcome::Distinct;
                    verdict.reason = "closure-exhausted";
                }
                return verdict;
            }
        int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
        Side& me = sides[s];
        Side& other = sides[1 - s];
        std::vector<Key> next;
        std::optional<Key> meet;
        bool over_budget = false;
        for (const Key& k : me.frontier) {
            expand(k, [&](Key y, RewriteStep step) {
                if (meet || over_budget) return;
                if (y.size() > cap) {
                    me.pruned = true;
                    return;
                }
                if (me.parent.count(y)) return;
                me.parent.emplace(y, std::pair{k, step});
                if (other.parent.count(y)) {
                    meet = y;
                    return;
                }
                if (me.parent.size() + other.parent.size() > budget.max_visited) {
                    over_budget = true;
                    return;
                }
                next.push_back(std::move(y));
            });
            if (meet || over_budget) break;
        }
        verdict.visited = sides[0].parent.size() + sides[1].parent.size();
        if (meet) {
            verdict.outcome = Outcome::Equal;
            verdict.certificate = certificate(*meet);
            return verdict;
        }
        if (over_budget) {
            verdict.outcome = Outcome::Unknown;
            verdict.reason = "visited budget " + std::to_string(budget.max_visited);
            return verdict;
        }
        me.frontier = std::move(next);
    }
}

ClassClosure RewriteSystem::closure(const Path& p, SearchBudget budget,
                                   const std::function<bool(const Path&)>& stop) const {
    std::size_t cap = budget.max_length != 0 ? budget.max_length : std::numeric_limits<std::size_t>::max();
    ClassClosure out;
    std::unordered_set<Key> seen;
    std::vector<Key> order{key(p)};
    seen.insert(order.front());
    auto as_path = [&](const Key& k) {
        Path member = from_key(k, p.source);
        member.target = p.target;
        return member;
    };
    bool pruned = false, over = false;
    out.stopped = stop && stop(p);
    for (std::size_t i = 0; i < order.size() && !over && !out.stopped; ++i) {
        Key k = order[i];
        expand(k, [&](Key y, RewriteStep) {
            if (over || out.stopped) return;
            if (y.size() > cap) {
                pruned = true;
                return;
            }
            if (!seen.insert(y).second) return;
            if (seen.size() > budget.max_visited) {
                over = true;
                return;
            }
            if (stop && stop(as_path(y))) out.stopped = true;
            order.push_back(std::move(y));
        });
    }
    out.complete = !pruned && !over && !out.stopped;
    for (const auto& k : order) out.members.push_back(as_path(k));
    return out;
}

EqualityVerdict paths_equal(const Path& p, const Path& q, const RelationSet& relations,
                            const QuiverWithFaces& quiver, SearchBudget budget) {
    return RewriteSystem(quiver, relations).equal(p, q, budget);
}

std::vector<long long> abelian_invariant(const Path& p, const RelationSet& relations,
                                         const QuiverWithFaces& quiver) {
    return AbelianInvariant(quiver.arrows.size(), relations).residue(p);
}

} // namespace dimerlab
