#pragma once

// Forward orbits, backward-orbit trees via exact pullback factorization,
// preperiodicity detection, and S-integral censuses.
//
// Backward orbits track Galois classes (irreducible forms), never approximate
// roots; sibling order is canonical (degree, then coefficients) so trees
// serialize identically regardless of evaluation schedule.

#include "arithdyn/binary_form.hpp"
#include "arithdyn/elliptic.hpp"
#include "arithdyn/integrality.hpp"
#include "arithdyn/rational_map.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arithdyn {

class resource_error : public math_error {
public:
    explicit resource_error(const std::string& what) : math_error(what) {}
};

ProjPoint apply(const RationalMap& phi, const ProjPoint& p);

struct ForwardOrbit {
    std::vector<ProjPoint> points;  // P, phi P, ..., truncated at first repeat
    bool cycle_found = false;
    // Index the repeated point maps back to (tail length), valid when found.
    int cycle_entry = -1;
};

ForwardOrbit forward_orbit(const RationalMap& phi, const ProjPoint& p, int nmax);

enum class Tristate { True, False, Undetermined };

// Generic maps: true on a witnessed cycle, undetermined past the cutoff.
Tristate is_phi_preperiodic(const RationalMap& phi, const ProjPoint& p, int cutoff);
// Lattes maps get exact answers through torsion certificates.
Tristate is_phi_preperiodic(const LattesMap& phi, const ProjPoint& p, int cutoff);

struct OrbitNode {
    BinaryForm cls;
    int ramification = 1;  // multiplicity in the parent's pullback
    int depth = 0;
    int parent = -1;       // index into the previous level; -1 at the root
    // Product of ramifications along the path (multiplicity in (phi^n)^* P).
    std::int64_t path_multiplicity = 1;
    bool integral = false;  // relative to the census divisor, set by the census
};

struct BackwardTree {
    ProjPoint root_point;
    int map_degree = 0;
    std::vector<std::vector<OrbitNode>> levels;  // levels[0] is the root class

    // sum of path_multiplicity * deg over a level; equals d^n.
    Int level_degree(int depth) const;
};

// Expands depth levels by factoring pullbacks; throws resource_error when
// d^depth exceeds expansion_limit.
BackwardTree backward_tree(const RationalMap& phi, const ProjPoint& p, int depth,
                           long expansion_limit = 1024);

// One node per line: depth ramification degree c_0,...,c_d integral-flag.
std::string serialize_tree(const BackwardTree& t);

struct CensusRow {
    int depth = 0;
    long classes = 0;
    long integral_classes = 0;
    long integral_rational_points = 0;
};

struct CensusReport {
    std::vector<CensusRow> rows;  // one per depth
    CensusRow cumulative;
};

// Marks every node and counts distinct classes per depth.
CensusReport integral_census(BackwardTree& tree, const Divisor& qdiv, const SSet& s);

struct GammaReport {
    std::vector<std::pair<int, ProjPoint>> forward_points;  // (m, point), deduplicated
    std::vector<BackwardTree> trees;  // one per (m, forward point)
    bool base_cycle_witnessed = false;
    CensusReport combined;   // classes deduplicated across trees, counted at
                             // their first (shallowest) occurrence
    CensusRow torsion_row;   // preperiodic classes up to the torsion bound
};

// Forward orbits of P under each phi_m, backward trees off every forward
// point, plus the torsion classes: the finite slice of Gamma the multiplier
// list covers, censused once against qdiv.
GammaReport gamma_census(const WeierstrassCurve& e, const ProjPoint& p,
                         const std::vector<int>& m_list, int depth, const Divisor& qdiv,
                         const SSet& s, int n_max_torsion = 8,
                         long expansion_limit = 1024);

}  // namespace arithdyn
