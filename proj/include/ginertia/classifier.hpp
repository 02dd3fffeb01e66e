#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ginertia/graph.hpp"
#include "ginertia/inertia.hpp"
#include "ginertia/transforms.hpp"

namespace ginertia {

// Class tags.  H: p=2, eta=0.  G: p=2, eta=1, split into G_minus
// (disconnected), G_plus (connected with a pendant), G_star (connected,
// pendant-free).  G1/G2/G3: one congruent addition away from an H member.
// X_complete / reduced / non_reduced describe the minimum-degree vertex
// analysis of a G_star member; B_star marks a clique expansion of some G_k.
enum class ClassLabel {
    H,
    G,
    G_minus,
    G_plus,
    G_star,
    G1,
    G2,
    G3,
    X_complete,
    reduced,
    non_reduced,
    B_star,
};
const char* to_string(ClassLabel l);

enum class GSplit { G_minus, G_plus, G_star };

enum class DisconnectedBranch {
    two_cliques_plus_k1,     // K_s + K_t + K_1
    h_plus_k1,               // H + K_1, H connected with p=2, eta=0
    clique_plus_near_clique  // K_s + (K_m minus an edge)
};
const char* to_string(DisconnectedBranch b);

/// Decomposition of a connected graph with pendants as a star K_{1,r} whose
/// center is joined to k vertices of a complete multipartite graph.  The
/// nullity identity d = r + sum(parts) - (l+1) holds whenever p = 2.
struct PendantForm {
    int center = 0;
    std::vector<int> leaves;
    int r = 0;
    std::vector<int> parts;   // multipartite part sizes, descending
    std::vector<int> attach;  // attached multipartite vertices (original labels)
    int d = 0;
    enum class Shape { other, star2_complete, star1_near_clique } shape = Shape::other;
};

struct G123Certificate {
    TransformKind kind = TransformKind::I;
    int removed = 0;             // the congruent vertex u
    std::vector<int> witness;    // the full find_* witness
};

enum class GYShape { clique, clique_minus_edge, clique_plus_k1, other };
const char* to_string(GYShape s);

/// X = N(vstar), Y = V \ N[vstar] for a minimum-degree vstar of a G_star
/// member; shape of G[Y], completeness of G[X], and for X-complete graphs
/// whether the Y-neighborhoods of X form a chain under inclusion.
struct XYAnalysis {
    int vstar = 0;
    std::vector<int> X;
    std::vector<int> Y;
    GYShape gy_shape = GYShape::other;
    bool x_complete = false;
    std::optional<bool> reduced;  // set only when x_complete
};

struct ClassReport {
    std::set<ClassLabel> labels;
    Inertia inertia;
    std::optional<int> vstar;
    std::optional<DisconnectedBranch> disconnected_branch;
    std::optional<PendantForm> pendant_form;
    std::optional<G123Certificate> g1, g2, g3;
    std::optional<XYAnalysis> xy;
    std::optional<BkSpec> b_star_spec;        // dedup-normalized
    std::vector<int> b_star_class_sizes;

    bool has(ClassLabel l) const { return labels.count(l) > 0; }
    std::string to_json() const;
};

bool in_H(const Graph& g);  // p = 2 and eta = 0
bool in_G(const Graph& g);  // p = 2 and eta = 1
GSplit split_G(const Graph& g);  // invalid-argument when not in G

/// Which branch of the disconnected characterization matches; nullopt iff
/// none does (equivalently, iff g is not in G).  Requires order >= 5 and g
/// disconnected.
std::optional<DisconnectedBranch> check_theorem_disconnected(const Graph& g);

/// Star-plus-multipartite decomposition of a connected graph with a pendant
/// vertex; nullopt when no decomposition with a non-edgeless multipartite
/// part exists (exactly the p != 2 case).
std::optional<PendantForm> match_pendant_form(const Graph& g);

/// Searches for a congruent vertex u of the given kind whose deletion lands
/// in H.  g itself must be connected; the remainder may be disconnected
/// (a II-type vertex can bridge components).
std::optional<G123Certificate> in_G123(const Graph& g, TransformKind kind);

/// vstar must attain the minimum degree.
XYAnalysis xy_analysis(const Graph& g, int vstar);

/// Connected, pendant-free member of G whose twin-quotient is G_k for some
/// 4 <= k <= 13; returns the dedup-normalized composition.
std::optional<BkSpec> match_bstar(const Graph& g);

ClassReport classify_full(const Graph& g);

}  // namespace ginertia
