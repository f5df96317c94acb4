#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "paf/curves.hpp"

namespace paf {

/// Ordered product of Dehn twists; +1 for a right twist, -1 for its inverse.
struct TwistWord {
    std::vector<std::pair<std::string, int>> letters;
};

/// One summand of a marked-surface sum: a P-piece restricted to a label
/// subset J of {l,m,r}, or a Q-piece.
struct Piece {
    enum class Kind { P, Q };
    Kind kind = Kind::P;
    std::string subset;  // for P: subset of "lmr" (order-insensitive)

    static Piece p(const std::string& j) { return Piece{Kind::P, j}; }
    static Piece q() { return Piece{Kind::Q, ""}; }

    bool has(char c) const { return subset.find(c) != std::string::npos; }
    bool has_left() const { return kind == Kind::Q || has('l'); }
    bool has_right() const { return kind == Kind::Q || has('r'); }

    std::string name() const {
        if (kind == Kind::Q) return "Q";
        std::string j;
        for (char c : {'l', 'm', 'r'})
            if (has(c)) {
                if (!j.empty()) j += ',';
                j += c;
            }
        return "P(" + j + ")";
    }
};

/// An ordered list of summands; both ends are capped with disks.
struct Assembly {
    std::vector<Piece> summands;
};

/// Combinatorial content of the P and Q pieces (figure-derived, shipped as
/// a versioned JSON fixture).
struct PieceTables {
    int version = 0;
    // P piece
    std::map<char, int> p_genus;                      // genus contribution per subscript
    std::vector<std::pair<std::string, std::string>> p_core_pairs;
    std::vector<std::pair<std::string, std::string>> p_m_pairs;
    std::vector<std::pair<std::string, std::string>> p_core_edges;   // (alpha, beta)
    std::vector<std::pair<std::string, std::string>> p_m_edges;
    std::string p_left_alpha_hook, p_left_beta_hook;   // junction curve meets these
    std::string p_right_alpha_hook, p_right_beta_hook;
    std::vector<std::string> p_stubs;
    // Q piece
    int q_genus = 0;
    std::vector<std::pair<std::string, std::string>> q_pairs;
    std::vector<std::pair<std::string, std::string>> q_edges;
    std::string q_alpha_hook, q_beta_hook;
    std::vector<std::string> q_stubs;
};

/// A generated or fixture-loaded example: the curve system, its twist word,
/// and bookkeeping used by the census constructions.
struct FamilyBuild {
    CurveSystem system;
    TwistWord word;
    std::string removable;  // designated nonseparating curve for the odd-k variant
    std::string source;     // "pieces" or fixture name
    bool filling = true;    // asserted by the construction
};

namespace family_detail {

inline std::string data_dir() {
    if (const char* env = std::getenv("PAF_FIXTURE_DIR")) return env;
#ifdef PAF_DATA_DIR
    return PAF_DATA_DIR;
#else
    return "data";
#endif
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

inline std::vector<std::pair<std::string, std::string>> str_pairs(const nlohmann::json& j) {
    std::vector<std::pair<std::string, std::string>> v;
    for (const auto& e : j) v.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    return v;
}

}  // namespace family_detail

inline PieceTables load_piece_tables(const std::string& dir = family_detail::data_dir()) {
    auto j = family_detail::load_json(dir + "/pieces.json");
    PieceTables t;
    t.version = j.at("version").get<int>();
    for (auto& [key, val] : j.at("P").at("genus").items()) t.p_genus[key[0]] = val.get<int>();
    t.p_core_pairs = family_detail::str_pairs(j["P"]["core_pairs"]);
    t.p_m_pairs = family_detail::str_pairs(j["P"]["m_pairs"]);
    t.p_core_edges = family_detail::str_pairs(j["P"]["core_edges"]);
    t.p_m_edges = family_detail::str_pairs(j["P"]["m_edges"]);
    t.p_left_alpha_hook = j["P"]["left"]["alpha_hook"];
    t.p_left_beta_hook = j["P"]["left"]["beta_hook"];
    t.p_right_alpha_hook = j["P"]["right"]["alpha_hook"];
    t.p_right_beta_hook = j["P"]["right"]["beta_hook"];
    for (const auto& s : j["P"]["left"]["stubs"]) t.p_stubs.push_back(s.get<std::string>());
    t.q_genus = j.at("Q").at("genus").get<int>();
    t.q_pairs = family_detail::str_pairs(j["Q"]["pairs"]);
    t.q_edges = family_detail::str_pairs(j["Q"]["edges"]);
    t.q_alpha_hook = j["Q"]["alpha_hook"];
    t.q_beta_hook = j["Q"]["beta_hook"];
    for (const auto& s : j["Q"]["stubs"]) t.q_stubs.push_back(s.get<std::string>());
    return t;
}

/// Declared genus of a capped assembly, from the piece tables.
inline int assembly_genus(const Assembly& asmb, const PieceTables& t) {
    int g = 0;
    for (const auto& p : asmb.summands) {
        if (p.kind == Piece::Kind::Q) {
            g += t.q_genus;
        } else {
            for (char c : p.subset) g += t.p_genus.at(c);
        }
    }
    return g;
}

/// Glues the summands end to end, caps the two ends, and returns the curve
/// system.  Arcs with matching interface labels merge into the closed
/// junction curves.  Throws std::invalid_argument naming the offending
/// summand index on an adjacency violation.
inline CurveSystem sum(const Assembly& asmb, const PieceTables& t) {
    const auto& ps = asmb.summands;
    if (ps.empty()) throw std::invalid_argument("sum: empty assembly");
    if (ps.front().has_left())
        throw std::invalid_argument("sum: summand 0 (" + ps.front().name() +
                                    ") has an open left interface under the cap");
    if (ps.back().has_right())
        throw std::invalid_argument("sum: summand " + std::to_string(ps.size() - 1) + " (" +
                                    ps.back().name() + ") has an open right interface under the cap");
    for (size_t i = 0; i + 1 < ps.size(); ++i) {
        if (!ps[i].has_right() || !ps[i + 1].has_left())
            throw std::invalid_argument("sum: incompatible adjacency at index " +
                                        std::to_string(i) + ": " + ps[i].name() +
                                        " followed by " + ps[i + 1].name());
        const auto& ls = ps[i].kind == Piece::Kind::Q ? t.q_stubs : t.p_stubs;
        const auto& rs = ps[i + 1].kind == Piece::Kind::Q ? t.q_stubs : t.p_stubs;
        if (ls != rs)
            throw std::invalid_argument("sum: stub pattern mismatch at index " + std::to_string(i));
    }

    std::vector<std::string> ca, cb;
    std::map<std::pair<std::string, std::string>, long long> edges;
    std::vector<std::pair<std::string, std::string>> pairs;
    auto add_edge = [&](const std::string& a, const std::string& b) { edges[{a, b}] = 2; };

    int pidx = 0, gap = 0;
    std::map<int, int> q_copies_in_gap;
    bool open_junction = false;
    std::string open_ja, open_jb;

    for (const auto& piece : ps) {
        if (piece.kind == Piece::Kind::P) {
            ++pidx;
            std::string p = "p" + std::to_string(pidx);
            auto qual = [&](const std::string& n) { return p + "." + n; };
            for (const auto& [a, b] : t.p_core_pairs) {
                ca.push_back(qual(a));
                cb.push_back(qual(b));
                pairs.push_back({qual(a), qual(b)});
            }
            for (const auto& [a, b] : t.p_core_edges) add_edge(qual(a), qual(b));
            if (piece.has('m')) {
                for (const auto& [a, b] : t.p_m_pairs) {
                    ca.push_back(qual(a));
                    cb.push_back(qual(b));
                    pairs.push_back({qual(a), qual(b)});
                }
                for (const auto& [a, b] : t.p_m_edges) add_edge(qual(a), qual(b));
            }
            if (open_junction) {
                add_edge(open_ja, qual(t.p_left_alpha_hook));
                add_edge(qual(t.p_left_beta_hook), open_jb);
                open_junction = false;
            }
            if (piece.has('r')) {
                ++gap;
                open_ja = "j" + std::to_string(gap) + ".a";
                open_jb = "j" + std::to_string(gap) + ".b";
                ca.push_back(open_ja);
                cb.push_back(open_jb);
                pairs.push_back({open_ja, open_jb});
                add_edge(open_ja, qual(t.p_right_alpha_hook));
                add_edge(qual(t.p_right_beta_hook), open_jb);
                open_junction = true;
            }
        } else {
            // Q rides on the junction arcs passing through it.
            if (!open_junction)
                throw std::invalid_argument("sum: Q-piece without an open junction");
            int copy = ++q_copies_in_gap[gap];
            std::string q = "g" + std::to_string(gap) + "q" + std::to_string(copy);
            auto qual = [&](const std::string& n) { return q + "." + n; };
            for (const auto& [a, b] : t.q_pairs) {
                ca.push_back(qual(a));
                cb.push_back(qual(b));
                pairs.push_back({qual(a), qual(b)});
            }
            for (const auto& [a, b] : t.q_edges) add_edge(qual(a), qual(b));
            add_edge(open_ja, qual(t.q_alpha_hook));
            add_edge(qual(t.q_beta_hook), open_jb);
        }
    }

    CurveSystem s;
    s.genus = assembly_genus(asmb, t);
    std::map<std::string, int> pair_index;
    for (size_t i = 0; i < pairs.size(); ++i) {
        pair_index[pairs[i].first] = (int)i;
        pair_index[pairs[i].second] = (int)i;
    }
    auto meta = [&](const std::string& id) {
        CurveMeta c;
        c.id = id;
        c.separating = false;
        int pi = pair_index.at(id);
        std::vector<long long> h(2 * s.genus, 0);
        h[pi % s.genus] = 1;  // isotropic classes e_{pi mod g}; pairs share a class
        c.homology = h;
        c.pair_id = "pr" + std::to_string(pi);
        return c;
    };
    for (const auto& id : ca) s.a_curves.push_back(meta(id));
    for (const auto& id : cb) s.b_curves.push_back(meta(id));
    s.intersections = IMat((int)ca.size(), (int)cb.size());
    std::map<std::string, int> ia, ib;
    for (size_t i = 0; i < ca.size(); ++i) ia[ca[i]] = (int)i;
    for (size_t i = 0; i < cb.size(); ++i) ib[cb[i]] = (int)i;
    for (const auto& [key, label] : edges) s.intersections.at(ia.at(key.first), ib.at(key.second)) = label;
    return s;
}

/// Case split for the generated families, g >= 3 and g not in {4, 5, 8}.
inline Assembly family_assembly(int g) {
    Assembly a;
    if (g == 3) {
        a.summands = {Piece::p("m")};
        return a;
    }
    if (g % 3 == 0) {
        int k = g / 3;
        a.summands.push_back(Piece::p("mr"));
        for (int i = 0; i < k - 2; ++i) a.summands.push_back(Piece::p("lr"));
        a.summands.push_back(Piece::p("l"));
    } else if (g % 3 == 1) {
        int k = (g - 1) / 3;
        if (k < 2) throw std::invalid_argument("family_assembly: g=" + std::to_string(g));
        a.summands.push_back(Piece::p("r"));
        a.summands.push_back(Piece::q());
        for (int i = 0; i < k - 2; ++i) a.summands.push_back(Piece::p("lr"));
        a.summands.push_back(Piece::p("l"));
    } else {
        int k = (g - 5) / 3;  // g = 3k + 5
        if (k < 2) throw std::invalid_argument("family_assembly: g=" + std::to_string(g));
        a.summands.push_back(Piece::p("r"));
        a.summands.push_back(Piece::q());
        for (int i = 0; i < k - 2; ++i) a.summands.push_back(Piece::p("lr"));
        a.summands.push_back(Piece::q());
        a.summands.push_back(Piece::p("l"));
    }
    return a;
}

inline FamilyBuild load_fixture(const std::string& name,
                                const std::string& dir = family_detail::data_dir()) {
    auto j = family_detail::load_json(dir + "/" + name + ".json");
    FamilyBuild fb;
    fb.system = system_from_json(j.at("system"));
    for (const auto& l : j.at("word"))
        fb.word.letters.push_back({l.at(0).get<std::string>(), l.at(1).get<int>()});
    fb.removable = j.value("removable", "");
    fb.filling = j.value("filling", true);
    fb.source = name;
    return fb;
}

namespace family_detail {

inline TwistWord difference_word(const CurveSystem& s) {
    TwistWord w;
    for (const auto& c : s.a_curves) w.letters.push_back({c.id, +1});
    for (const auto& c : s.b_curves) w.letters.push_back({c.id, -1});
    return w;
}

inline std::string generated_removable(int g) {
    // A curve whose removal keeps the bipartite graph connected.
    if (g % 3 == 0) return "p1.bm";  // includes g = 3
    return "g1q1.bl";
}

}  // namespace family_detail

/// The multicurve family (A_g, B_g) and twist word f_g = T_{A_g} T_{B_g}^{-1}
/// (f_2 = T_{A_2} T_{B_2}, both twists positive).  g in {2, 4, 5, 8} load
/// figure-derived fixtures; the rest come from the piece calculus.
inline FamilyBuild build_family(int g, const std::string& dir = family_detail::data_dir()) {
    if (g < 2) throw std::invalid_argument("build_family: g must be >= 2");
    if (g == 2) return load_fixture("f2", dir);
    if (g == 4 || g == 5 || g == 8) return load_fixture("g" + std::to_string(g), dir);
    PieceTables t = load_piece_tables(dir);
    FamilyBuild fb;
    fb.system = sum(family_assembly(g), t);
    if (fb.system.genus != g)
        throw std::logic_error("build_family: genus audit failed for g=" + std::to_string(g));
    fb.word = family_detail::difference_word(fb.system);
    fb.removable = family_detail::generated_removable(g);
    fb.source = "pieces";
    return fb;
}

/// The second genus-2 example: A_2' one separating curve, B_2' two
/// nonseparating curves meeting it twice each; all twists positive.
inline FamilyBuild build_f2prime(const std::string& dir = family_detail::data_dir()) {
    return load_fixture("f2prime", dir);
}

/// Odd fixed-rank variant: for odd k >= 5, the genus-(k+1)/2 family with one
/// designated nonseparating curve removed from the system and the word.
inline FamilyBuild build_odd_variant(int k, const std::string& dir = family_detail::data_dir()) {
    if (k < 5 || k % 2 == 0)
        throw std::invalid_argument("build_odd_variant: k must be odd and >= 5");
    int g0 = (k + 1) / 2;
    FamilyBuild base = build_family(g0, dir);
    const std::string& victim = base.removable;
    if (victim.empty()) throw std::logic_error("build_odd_variant: no removable curve designated");

    FamilyBuild fb;
    fb.source = base.source + "-odd";
    fb.filling = base.filling;
    CurveSystem& s = fb.system;
    s.genus = base.system.genus;
    int drop_a = base.system.a_index(victim);
    int drop_b = base.system.b_index(victim);
    if (drop_a < 0 && drop_b < 0)
        throw std::logic_error("build_odd_variant: removable curve " + victim + " not in system");
    std::string partner_pair;
    for (size_t i = 0; i < base.system.a_curves.size(); ++i)
        if ((int)i != drop_a) s.a_curves.push_back(base.system.a_curves[i]);
        else if (base.system.a_curves[i].pair_id) partner_pair = *base.system.a_curves[i].pair_id;
    for (size_t i = 0; i < base.system.b_curves.size(); ++i)
        if ((int)i != drop_b) s.b_curves.push_back(base.system.b_curves[i]);
        else if (base.system.b_curves[i].pair_id) partner_pair = *base.system.b_curves[i].pair_id;
    for (auto* side : {&s.a_curves, &s.b_curves})
        for (auto& c : *side)
            if (c.pair_id && *c.pair_id == partner_pair) c.pair_id.reset();
    s.intersections = IMat((int)s.a_curves.size(), (int)s.b_curves.size());
    for (int i = 0, si = 0; i < base.system.intersections.rows; ++i) {
        if (i == drop_a) continue;
        for (int j = 0, sj = 0; j < base.system.intersections.cols; ++j) {
            if (j == drop_b) continue;
            s.intersections.at(si, sj) = base.system.intersections.at(i, j);
            ++sj;
        }
        ++si;
    }
    for (const auto& l : base.word.letters)
        if (l.first != victim) fb.word.letters.push_back(l);
    fb.removable = "";
    return fb;
}

/// The two genus-2 positive multitwist products of Section 4 (kappa = 3 and
/// kappa = 1 respectively).
inline std::pair<FamilyBuild, FamilyBuild> build_k3_k1_examples(
    const std::string& dir = family_detail::data_dir()) {
    return {load_fixture("k3", dir), load_fixture("k1", dir)};
}

}  // namespace paf
