#pragma once

#include "dimerlab/polygon.hpp"
#include "dimerlab/quiver.hpp"
#include "dimerlab/rewrite.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dimerlab {

enum class GeneratorTag { X, Y, Z };
std::string_view to_string(GeneratorTag t);

/// One generator class of the boundary algebra.
struct Generator {
    int source = 0; // boundary labels
    int target = 0;
    GeneratorTag tag = GeneratorTag::X;
    Path representative;     // shortest, then lexicographically least, member
    std::size_t class_size = 0;
};

struct BoundaryPresentation {
    int m = 2;
    int n = 3;
    std::vector<Generator> generators; // sorted by (target, source, tag)
    std::size_t candidates = 0;        // internal-interior paths examined
    std::size_t composite_classes = 0;

    int vertex_count() const { return m * n; }
};

/// Tag rule on boundary labels mod m*n: a step k-1 -> k is x, a step
/// k+1 -> k is z, anything else is y.
GeneratorTag classify(int source, int target, int boundary_count);

/// Enumerates boundary-to-boundary paths with internal interior vertices, groups
/// them into rewriting classes and keeps the classes that do not factor
/// through an intermediate boundary vertex. Throws inconclusive-presentation
/// when a class cannot be closed within the budget.
BoundaryPresentation boundary_generators(const RewriteSystem& rs, SearchBudget budget = {});

struct GammaArrow {
    GeneratorTag tag = GeneratorTag::X;
    int index = 0; // the arrow ends at `index`
    int source = 0;
    int target = 0;

    std::string name() const;
};

struct GammaQuiver {
    int m = 2;
    int n = 3;
    std::vector<GammaArrow> arrows;

    int vertex_count() const { return m * n; }
    /// Index of the arrow with the given tag ending at label k (mod m*n), or -1.
    int find(GeneratorTag tag, int k) const;
};

/// Labels are reduced into [1, m*n].
int wrap_label(int k, int boundary_count);

/// Source of y_k: k + 2 + 2 * ((-k) mod m).
int gamma_y_source(int k, int m, int boundary_count);

GammaQuiver build_gamma(int m, int n);

struct GammaMatch {
    bool matched = false;
    int rotation = 0;       // presentation label l maps to l + rotation (or rotation - l)
    bool reflected = false;
    std::string obstruction;
    std::vector<int> generator_of; // per Gamma arrow, the matched generator index
    /// Presentation label of Gamma vertex k, i.e. inverse relabelling.
    int presentation_label(int gamma_label, int boundary_count) const;
};

/// Tries every rotation (and, when allowed, reflection) of the presentation's
/// labels. Throws incompatible when the vertex counts differ.
GammaMatch match_gamma(const BoundaryPresentation& bp, const GammaQuiver& g, bool allow_reflection = false);

struct RelationInstance {
    std::string family;
    int index = 0;
    std::string lhs;
    std::string rhs;
    EqualityVerdict verdict;
};

struct RelationReport {
    std::vector<RelationInstance> instances;

    std::size_t count(Outcome o) const;
    bool passed() const { return count(Outcome::Equal) == instances.size(); }
    bool inconclusive() const { return count(Outcome::Unknown) > 0; }
};

/// Word over Gamma's arrows, e.g. {{X,3},{Y,1}} for x_3 y_1.
using GammaWord = std::vector<std::pair<GeneratorTag, int>>;

struct GammaRelation {
    std::string family;
    int index = 0;
    GammaWord lhs;
    GammaWord rhs;
};

/// All relation instances of the boundary algebra of Gamma(m, n), indices in [1, m*n].
std::vector<GammaRelation> gamma_relations(int m, int n);

std::string to_string(const GammaWord& w);

/// Path in the quiver for a word, using the matched generator representatives.
Path realize(const GammaWord& w, const BoundaryPresentation& bp, const GammaQuiver& g, const GammaMatch& match);

RelationReport verify_theorem_relations(const BoundaryPresentation& bp, const GammaQuiver& g,
                                        const GammaMatch& match, const RewriteSystem& rs,
                                        SearchBudget budget = {});

struct CentralElementReport {
    std::vector<RelationInstance> commutations; // one per generator: u_s a = a u_t

    bool passed() const;
    bool inconclusive() const;
};

CentralElementReport verify_central_element(const BoundaryPresentation& bp, const RewriteSystem& rs,
                                            SearchBudget budget = {});

/// Pairwise comparison of all face cycles through each vertex with at least
/// two incident faces.
RelationReport verify_chordless_cycles(const RewriteSystem& rs, SearchBudget budget = {});

struct NamedPath {
    std::string name;      // e.g. "z4", "y6", "alpha0"
    GammaArrow gamma;      // the Gamma arrow the path should represent
    Path path;
    EqualityVerdict verdict; // against the extracted generator matched to `gamma`
};

/// Generator paths of the fan triangulation written through the arrow
/// families of its quiver: for m = 2 the alpha/beta/gamma products, for all m
/// the level-line y paths around each corner and the two-step z paths. Throws
/// formula-mismatch when a product fails to compose.
std::vector<NamedPath> fan_generator_paths(int m, int n, const RewriteSystem& rs, const BoundaryPresentation& bp,
                                           const GammaQuiver& g, const GammaMatch& match,
                                           SearchBudget budget = {});

struct TransportedClass {
    std::string name; // Gamma name
    bool affected = false;
    Path old_representative;
    Path new_representative;
    std::vector<Path> connecting; // maximal pieces of the new representative outside the flip region
    std::string old_text;         // vertex sequences, for reports
    std::string new_text;
    std::vector<std::string> connecting_text;
    EqualityVerdict verdict;      // transported old path vs new representative (unaffected classes)
};

struct FlipTransportCertificate {
    FlipMove move;
    bool before_matched = false;
    bool after_matched = false;
    std::vector<TransportedClass> classes;
    RelationReport relations_after;

    std::size_t affected_count() const;
    bool passed() const;
    bool inconclusive() const;
};

FlipTransportCertificate verify_flip_transport(const Triangulation& t, Diagonal d, int m, SearchBudget budget = {});

} // namespace dimerlab
