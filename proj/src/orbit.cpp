#include "arithdyn/orbit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace arithdyn {

ProjPoint apply(const RationalMap& phi, const ProjPoint& p) {
    return phi.apply(p);
}

ForwardOrbit forward_orbit(const RationalMap& phi, const ProjPoint& p, int nmax) {
    ForwardOrbit out;
    std::map<ProjPoint, int> seen;
    ProjPoint cur = p;
    for (int n = 0; n <= nmax; ++n) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            out.cycle_found = true;
            out.cycle_entry = it->second;
            return out;
        }
        seen[cur] = n;
        out.points.push_back(cur);
        if (n == nmax) break;
        cur = phi.apply(cur);
    }
    return out;
}

Tristate is_phi_preperiodic(const RationalMap& phi, const ProjPoint& p, int cutoff) {
    ForwardOrbit orb = forward_orbit(phi, p, cutoff);
    if (orb.cycle_found) return Tristate::True;
    return Tristate::Undetermined;
}

Tristate is_phi_preperiodic(const LattesMap& phi, const ProjPoint& p, int cutoff) {
    ForwardOrbit orb = forward_orbit(phi.map, p, cutoff);
    if (orb.cycle_found) return Tristate::True;
    // Preperiodic points of a Lattes map are exactly the torsion x-classes.
    return is_torsion_x_class(phi.curve, BinaryForm::point_class(p)) ? Tristate::True
                                                                     : Tristate::False;
}

Int BackwardTree::level_degree(int depth) const {
    Int sum = 0;
    for (const auto& node : levels.at(depth))
        sum += Int(node.path_multiplicity) * node.cls.degree();
    return sum;
}

BackwardTree backward_tree(const RationalMap& phi, const ProjPoint& p, int depth,
                           long expansion_limit) {
    int d = phi.degree();
    Int size = 1;
    for (int i = 0; i < depth; ++i) size *= d;
    if (size > expansion_limit)
        throw resource_error("backward tree of size " + size.get_str() +
                             " exceeds the expansion limit " + std::to_string(expansion_limit));
    BackwardTree t;
    t.root_point = p;
    t.map_degree = d;
    OrbitNode root;
    root.cls = BinaryForm::point_class(p);
    t.levels.push_back({root});
    for (int n = 0; n < depth; ++n) {
        std::vector<OrbitNode> next;
        const auto& level = t.levels.back();
        for (size_t pi = 0; pi < level.size(); ++pi) {
            const OrbitNode& parent = level[pi];
            BinaryForm pulled = pullback_form(parent.cls, phi);
            auto fac = factor_form(pulled);
            for (const auto& [irr, mult] : fac.factors) {
                OrbitNode child;
                child.cls = irr;
                child.ramification = mult;
                child.depth = n + 1;
                child.parent = static_cast<int>(pi);
                child.path_multiplicity = parent.path_multiplicity * mult;
                next.push_back(std::move(child));
            }
        }
        t.levels.push_back(std::move(next));
    }
    return t;
}

std::string serialize_tree(const BackwardTree& t) {
    std::ostringstream os;
    for (const auto& level : t.levels) {
        for (const auto& node : level) {
            os << node.depth << " " << node.ramification << " " << node.cls.degree()
               << " ";
            const auto& c = node.cls.coeffs();
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) os << ",";
                os << c[i].get_str();
            }
            os << " " << (node.integral ? 1 : 0) << "\n";
        }
    }
    return os.str();
}

namespace {

void count_level(const std::vector<const OrbitNode*>& nodes, CensusRow& row) {
    std::set<BinaryForm> seen, integral, rational;
    for (const auto* node : nodes) {
        seen.insert(node->cls);
        if (node->integral) {
            integral.insert(node->cls);
            if (node->cls.degree() == 1) rational.insert(node->cls);
        }
    }
    row.classes += static_cast<long>(seen.size());
    row.integral_classes += static_cast<long>(integral.size());
    row.integral_rational_points += static_cast<long>(rational.size());
}

void mark_node(OrbitNode& node, const Divisor& qdiv, const SSet& s,
               std::map<BinaryForm, bool>& memo) {
    auto it = memo.find(node.cls);
    if (it != memo.end()) {
        node.integral = it->second;
        return;
    }
    bool flag;
    if (node.cls.degree() == 1) {
        flag = is_S_integral_point(node.cls.root(), qdiv, s);
    } else {
        flag = is_S_integral_class(node.cls, qdiv, s);
    }
    memo[node.cls] = flag;
    node.integral = flag;
}

}  // namespace

CensusReport integral_census(BackwardTree& tree, const Divisor& qdiv, const SSet& s) {
    CensusReport rep;
    std::map<BinaryForm, bool> memo;
    for (size_t n = 0; n < tree.levels.size(); ++n) {
        CensusRow row;
        row.depth = static_cast<int>(n);
        std::vector<const OrbitNode*> ptrs;
        for (auto& node : tree.levels[n]) {
            mark_node(node, qdiv, s, memo);
            ptrs.push_back(&node);
        }
        count_level(ptrs, row);
        rep.rows.push_back(row);
    }
    rep.cumulative.depth = -1;
    for (const auto& row : rep.rows) {
        rep.cumulative.classes += row.classes;
        rep.cumulative.integral_classes += row.integral_classes;
        rep.cumulative.integral_rational_points += row.integral_rational_points;
    }
    return rep;
}

GammaReport gamma_census(const WeierstrassCurve& e, const ProjPoint& p,
                         const std::vector<int>& m_list, int depth, const Divisor& qdiv,
                         const SSet& s, int n_max_torsion, long expansion_limit) {
    GammaReport rep;
    std::map<BinaryForm, bool> memo;

    // Torsion x-classes are exactly the preperiodic points of a Lattes map,
    // so the base can be certified even when the cycle lies past the depth cap.
    if (is_torsion_x_class(e, BinaryForm::point_class(p))) rep.base_cycle_witnessed = true;

    std::set<ProjPoint> forward_seen;
    for (int m : m_list) {
        LattesMap lm = mult_m_lattes(e, m);
        ForwardOrbit orb = forward_orbit(lm.map, p, depth);
        if (orb.cycle_found) rep.base_cycle_witnessed = true;
        for (const auto& q : orb.points) {
            if (forward_seen.insert(q).second) rep.forward_points.emplace_back(m, q);
        }
    }
    // Backward trees: under each map, off every forward point collected.
    for (int m : m_list) {
        LattesMap lm = mult_m_lattes(e, m);
        for (const auto& [m0, q] : rep.forward_points) {
            (void)m0;
            BackwardTree t = backward_tree(lm.map, q, depth, expansion_limit);
            for (auto& level : t.levels)
                for (auto& node : level) mark_node(node, qdiv, s, memo);
            rep.trees.push_back(std::move(t));
        }
    }

    // Combined per-depth census, each class counted once at its first depth.
    std::set<BinaryForm> counted;
    size_t max_levels = 0;
    for (const auto& t : rep.trees) max_levels = std::max(max_levels, t.levels.size());
    for (size_t n = 0; n < max_levels; ++n) {
        CensusRow row;
        row.depth = static_cast<int>(n);
        std::vector<const OrbitNode*> ptrs;
        for (const auto& t : rep.trees) {
            if (n >= t.levels.size()) continue;
            for (const auto& node : t.levels[n])
                if (counted.insert(node.cls).second) ptrs.push_back(&node);
        }
        count_level(ptrs, row);
        rep.combined.rows.push_back(row);
    }
    rep.combined.cumulative.depth = -1;
    for (const auto& row : rep.combined.rows) {
        rep.combined.cumulative.classes += row.classes;
        rep.combined.cumulative.integral_classes += row.integral_classes;
        rep.combined.cumulative.integral_rational_points += row.integral_rational_points;
    }

    // Torsion classes up to the bound: the preperiodic slice.
    {
        CensusRow row;
        row.depth = -2;
        std::set<BinaryForm> torsion_classes;
        torsion_classes.insert(BinaryForm({Int(0), Int(1)}));  // pi(O)
        for (int n = 2; n <= n_max_torsion; ++n) {
            for (const auto& [irr, mult] : factor_form(torsion_form(e, n)).factors)
                torsion_classes.insert(irr);
        }
        std::vector<OrbitNode> nodes;
        nodes.reserve(torsion_classes.size());
        for (const auto& cls : torsion_classes) {
            OrbitNode node;
            node.cls = cls;
            mark_node(node, qdiv, s, memo);
            nodes.push_back(std::move(node));
        }
        std::vector<const OrbitNode*> ptrs;
        for (const auto& node : nodes) ptrs.push_back(&node);
        count_level(ptrs, row);
        rep.torsion_row = row;
    }
    return rep;
}

}  // namespace arithdyn
