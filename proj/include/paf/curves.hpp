#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "paf/matrix.hpp"

namespace paf {

/// One simple closed curve of a multicurve, with optional homology data.
struct CurveMeta {
    std::string id;
    bool separating = false;
    std::optional<std::vector<long long>> homology;  // length 2g, basis (e_1..e_g, f_1..f_g)
    std::optional<std::string> pair_id;
};

/// A pair of multicurves (A, B) on a closed genus-g surface together with
/// the geometric intersection matrix N[i][j] = i(alpha_i, beta_j).
struct CurveSystem {
    int genus = 0;
    std::vector<CurveMeta> a_curves;
    std::vector<CurveMeta> b_curves;
    IMat intersections;  // |A| x |B|

    int a_index(const std::string& id) const {
        for (size_t i = 0; i < a_curves.size(); ++i)
            if (a_curves[i].id == id) return (int)i;
        return -1;
    }
    int b_index(const std::string& id) const {
        for (size_t i = 0; i < b_curves.size(); ++i)
            if (b_curves[i].id == id) return (int)i;
        return -1;
    }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    bool has(const std::string& code) const {
        for (const auto& v : violations)
            if (v.rfind(code, 0) == 0) return true;
        return false;
    }
};

namespace detail {

inline bool bipartite_connected(const IMat& n) {
    int m = n.rows, k = n.cols;
    if (m + k == 0) return false;
    std::vector<int> seen(m + k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u < m) {
            for (int j = 0; j < k; ++j)
                if (n.at(u, j) != 0 && !seen[m + j]) {
                    seen[m + j] = 1;
                    ++count;
                    stack.push_back(m + j);
                }
        } else {
            for (int i = 0; i < m; ++i)
                if (n.at(i, u - m) != 0 && !seen[i]) {
                    seen[i] = 1;
                    ++count;
                    stack.push_back(i);
                }
        }
    }
    return count == m + k;
}

}  // namespace detail

/// Checks the structural invariants; returns a report rather than throwing.
inline ValidationReport validate(const CurveSystem& s) {
    ValidationReport rep;
    if (s.genus < 2) rep.violations.push_back("genus: must be >= 2");
    if (s.intersections.rows != (int)s.a_curves.size() ||
        s.intersections.cols != (int)s.b_curves.size())
        rep.violations.push_back("shape: intersection matrix does not match curve counts");
    for (int i = 0; i < s.intersections.rows; ++i)
        for (int j = 0; j < s.intersections.cols; ++j)
            if (s.intersections.at(i, j) < 0) {
                rep.violations.push_back("nonnegative: entry (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") is negative");
                goto after_entries;
            }
after_entries:
    if (!detail::bipartite_connected(s.intersections))
        rep.violations.push_back("connected: bipartite intersection graph is disconnected");

    std::map<std::string, std::vector<const CurveMeta*>> pairs;
    auto check_curve = [&](const CurveMeta& c) {
        if (c.homology) {
            if ((int)c.homology->size() != 2 * s.genus)
                rep.violations.push_back("homology_length: curve " + c.id);
            bool zero = true;
            for (long long v : *c.homology)
                if (v != 0) zero = false;
            if (c.separating && !zero)
                rep.violations.push_back("separating_homology: curve " + c.id +
                                         " is separating but has nonzero class");
        }
        if (c.pair_id) pairs[*c.pair_id].push_back(&c);
    };
    for (const auto& c : s.a_curves) check_curve(c);
    for (const auto& c : s.b_curves) check_curve(c);

    for (const auto& [pid, members] : pairs) {
        if (members.size() != 2) {
            rep.violations.push_back("pair_unresolved: pair_id " + pid);
            continue;
        }
        const auto& h0 = members[0]->homology;
        const auto& h1 = members[1]->homology;
        if (h0 && h1) {
            bool eq = *h0 == *h1;
            bool neg = h0->size() == h1->size();
            if (neg)
                for (size_t i = 0; i < h0->size(); ++i)
                    if ((*h0)[i] != -(*h1)[i]) neg = false;
            if (!eq && !neg)
                rep.violations.push_back("pair_sign: pair_id " + pid +
                                         " classes differ beyond sign");
        }
    }
    return rep;
}

/// Labeled bipartite intersection graph: one vertex per curve, an edge with
/// label N[i][j] wherever N[i][j] > 0.
struct BipartiteGraph {
    struct Edge {
        int a;  // index into a_curves
        int b;  // index into b_curves
        long long label;
    };
    int n_a = 0;
    int n_b = 0;
    std::vector<Edge> edges;

    std::vector<int> degrees() const {
        std::vector<int> d(n_a + n_b, 0);
        for (const auto& e : edges) {
            ++d[e.a];
            ++d[n_a + e.b];
        }
        return d;
    }

    IMat to_matrix() const {
        IMat n(n_a, n_b);
        for (const auto& e : edges) n.at(e.a, e.b) = e.label;
        return n;
    }

    /// Row sum of N N^T at an alpha vertex, summed over length-2 paths.
    long long gram_row_sum(int a) const {
        long long total = 0;
        for (const auto& e1 : edges)
            if (e1.a == a)
                for (const auto& e2 : edges)
                    if (e2.b == e1.b) total += e1.label * e2.label;
        return total;
    }
};

inline BipartiteGraph bipartite_graph(const CurveSystem& s) {
    ValidationReport rep = validate(s);
    if (!rep.ok())
        throw std::invalid_argument("bipartite_graph: invalid system: " + rep.violations.front());
    BipartiteGraph g;
    g.n_a = s.intersections.rows;
    g.n_b = s.intersections.cols;
    for (int i = 0; i < g.n_a; ++i)
        for (int j = 0; j < g.n_b; ++j)
            if (s.intersections.at(i, j) > 0)
                g.edges.push_back({i, j, s.intersections.at(i, j)});
    return g;
}

// --- JSON fixture format -------------------------------------------------
//
// { "genus": g,
//   "a_curves": [ {"id": "...", "separating": false, "homology": [...],
//                  "pair_id": "..."}, ... ],
//   "b_curves": [ ... ],
//   "intersections": [ [i, j, count], ... ] }   // nonzero entries only

inline nlohmann::ordered_json curve_meta_to_json(const CurveMeta& c) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["separating"] = c.separating;
    if (c.homology) j["homology"] = *c.homology;
    if (c.pair_id) j["pair_id"] = *c.pair_id;
    return j;
}

inline nlohmann::ordered_json to_json(const CurveSystem& s) {
    nlohmann::ordered_json j;
    j["genus"] = s.genus;
    j["a_curves"] = nlohmann::ordered_json::array();
    for (const auto& c : s.a_curves) j["a_curves"].push_back(curve_meta_to_json(c));
    j["b_curves"] = nlohmann::ordered_json::array();
    for (const auto& c : s.b_curves) j["b_curves"].push_back(curve_meta_to_json(c));
    auto ints = nlohmann::ordered_json::array();
    for (int i = 0; i < s.intersections.rows; ++i)
        for (int k = 0; k < s.intersections.cols; ++k)
            if (s.intersections.at(i, k) != 0)
                ints.push_back({i, k, s.intersections.at(i, k)});
    j["intersections"] = ints;
    return j;
}

inline CurveMeta curve_meta_from_json(const nlohmann::json& j) {
    CurveMeta c;
    c.id = j.at("id").get<std::string>();
    c.separating = j.value("separating", false);
    if (j.contains("homology")) c.homology = j["homology"].get<std::vector<long long>>();
    if (j.contains("pair_id")) c.pair_id = j["pair_id"].get<std::string>();
    return c;
}

inline CurveSystem system_from_json(const nlohmann::json& j) {
    CurveSystem s;
    s.genus = j.at("genus").get<int>();
    for (const auto& cj : j.at("a_curves")) s.a_curves.push_back(curve_meta_from_json(cj));
    for (const auto& cj : j.at("b_curves")) s.b_curves.push_back(curve_meta_from_json(cj));
    s.intersections = IMat((int)s.a_curves.size(), (int)s.b_curves.size());
    for (const auto& e : j.at("intersections")) {
        int i = e.at(0).get<int>(), k = e.at(1).get<int>();
        if (i < 0 || i >= s.intersections.rows || k < 0 || k >= s.intersections.cols)
            throw std::invalid_argument("system_from_json: intersection index out of range");
        s.intersections.at(i, k) = e.at(2).get<long long>();
    }
    return s;
}

}  // namespace paf
