#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "sl2hecke/quotient.hpp"

namespace sl2hecke {

inline const char* point_name(PointKind k) { return k == PointKind::origin ? "O" : "inf"; }

// Machine-readable gluing datum. The schema is stable:
// {p, g, lines:[{r, class, kind}], glue_edges:[{from_r, from_point, to_r,
//  to_point}], components:[[...],[...]]}
inline nlohmann::json graph_json(const GluingGraph& g) {
    nlohmann::json j;
    j["p"] = g.p;
    j["g"] = g.generator;
    j["lines"] = nlohmann::json::array();
    for (const auto& ln : g.lines) {
        nlohmann::json l;
        l["r"] = ln.r;
        l["class"] = ln.cls;
        l["kind"] = ln.singleton ? "singleton" : "pair";
        if (ln.origin_preimage) l["origin_preimage"] = *ln.origin_preimage;
        if (ln.infinity_preimage) l["infinity_preimage"] = *ln.infinity_preimage;
        j["lines"].push_back(l);
    }
    j["glue_edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) {
        j["glue_edges"].push_back({{"from_r", e.from_r},
                                   {"from_point", point_name(e.from_point)},
                                   {"to_r", e.to_r},
                                   {"to_point", point_name(e.to_point)}});
    }
    j["components"] = g.components;
    return j;
}

inline std::string render_json(const GluingGraph& g) { return graph_json(g).dump(2) + "\n"; }

// Undirected DOT graph: one node per projective line, marked points as
// tail/head labels on the glue edges.
inline std::string render_dot(const GluingGraph& g) {
    std::ostringstream os;
    XiModel m = xi_model(g.p);
    os << "// quotient gluing graph for p = " << g.p << " (g = " << g.generator << ")\n";
    os << "// source space: " << m.affine_lines << " affine lines + " << m.crossing_pairs
       << " crossing-line pairs; normalisation: " << m.normalisation_lines << " affine lines\n";
    os << "graph quotient_p" << g.p << " {\n";
    os << "  layout=neato;\n  node [shape=circle, fixedsize=true, width=0.7];\n";
    for (const auto& ln : g.lines) {
        os << "  P" << ln.r << " [label=\"P" << ln.r << "\\n{";
        for (std::size_t i = 0; i < ln.cls.size(); ++i) {
            if (i) os << ",";
            os << "id^" << ln.cls[i];
        }
        os << "}\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  P" << e.from_r << " -- P" << e.to_r << " [taillabel=\"" << point_name(e.from_point)
           << e.from_r << "\", headlabel=\"" << point_name(e.to_point) << e.to_r << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

// Four-row picture: the component inventory of the singular space, its
// normalisation, the separated projective lines, and the re-glued chains
// (tangent circles, one row per connected component).
inline std::string render_svg(const GluingGraph& g) {
    std::ostringstream os;
    long p = g.p;
    XiModel m = xi_model(p);
    const double R = 22.0;
    double width = 120.0 + 2.0 * R * static_cast<double>(m.normalisation_lines) + 40.0;
    double rows[4] = {60.0, 170.0, 280.0, 390.0};
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"470\" font-family=\"monospace\" font-size=\"12\">\n";
    auto label = [&](double y, const std::string& text) {
        os << "  <text x=\"10\" y=\"" << y + 4 << "\">" << text << "</text>\n";
    };

    // row 1: two affine lines and the crossing pairs
    label(rows[0], "X");
    double x = 110.0;
    os << "  <line x1=\"" << x << "\" y1=\"" << rows[0] - 30 << "\" x2=\"" << x << "\" y2=\""
       << rows[0] + 30 << "\" stroke=\"black\"/>\n";
    x += 40.0;
    for (long i = 0; i < m.crossing_pairs; ++i, x += 52.0) {
        os << "  <line x1=\"" << x << "\" y1=\"" << rows[0] + 30 << "\" x2=\"" << x + 36
           << "\" y2=\"" << rows[0] - 30 << "\" stroke=\"black\"/>\n";
        os << "  <line x1=\"" << x << "\" y1=\"" << rows[0] - 30 << "\" x2=\"" << x + 36
           << "\" y2=\"" << rows[0] + 30 << "\" stroke=\"black\"/>\n";
        os << "  <circle cx=\"" << x + 18 << "\" cy=\"" << rows[0] << "\" r=\"3\"/>\n";
    }
    os << "  <line x1=\"" << x << "\" y1=\"" << rows[0] - 30 << "\" x2=\"" << x << "\" y2=\""
       << rows[0] + 30 << "\" stroke=\"black\"/>\n";

    // row 2: the q-1 separated affine lines
    label(rows[1], "X'");
    x = 110.0;
    for (long i = 0; i < m.normalisation_lines; ++i, x += 2.0 * R) {
        os << "  <line x1=\"" << x << "\" y1=\"" << rows[1] - 30 << "\" x2=\"" << x << "\" y2=\""
           << rows[1] + 30 << "\" stroke=\"black\"/>\n";
        os << "  <circle cx=\"" << x << "\" cy=\"" << rows[1] << "\" r=\"3\"/>\n";
    }

    // row 3: the separated projective lines
    label(rows[2], "X'/R'");
    x = 110.0 + R;
    for (const auto& ln : g.lines) {
        os << "  <circle cx=\"" << x << "\" cy=\"" << rows[2] << "\" r=\"" << R
           << "\" fill=\"none\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << x - 8 << "\" y=\"" << rows[2] + R + 16 << "\">Z" << ln.r
           << "</text>\n";
        x += 2.0 * R + 16.0;
    }

    // row 4: one row of tangent circles per chain
    label(rows[3], "X/R");
    x = 110.0 + R;
    for (const auto& comp : g.components) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            os << "  <circle cx=\"" << x << "\" cy=\"" << rows[3] << "\" r=\"" << R
               << "\" fill=\"none\" stroke=\"black\"/>\n";
            os << "  <text x=\"" << x - 8 << "\" y=\"" << rows[3] + R + 16 << "\">P" << comp[i]
               << "</text>\n";
            if (i + 1 < comp.size()) {
                // tangency point = the glued marked points
                os << "  <circle cx=\"" << x + R << "\" cy=\"" << rows[3] << "\" r=\"3\"/>\n";
                x += 2.0 * R;  // tangent to the next circle
            }
        }
        x += 2.0 * R + 50.0;  // gap between components
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string render_ascii(const GluingGraph& g) {
    std::ostringstream os;
    XiModel m = xi_model(g.p);
    os << "p = " << g.p << ", generator g = " << g.generator << "\n";
    os << "singular space: 2 affine lines + " << m.crossing_pairs << " crossing-line pairs ("
       << m.singular_points << " singular points)\n";
    os << "normalisation: " << m.normalisation_lines << " affine lines\n";
    os << "separated quotient: " << g.lines.size() << " projective lines\n";
    for (const auto& ln : g.lines) {
        os << "  Z" << ln.r << " <- {";
        for (std::size_t i = 0; i < ln.cls.size(); ++i) {
            if (i) os << ", ";
            os << "id^" << ln.cls[i];
        }
        os << "}" << (ln.singleton ? " (self-paired)" : "") << "\n";
    }
    os << "glue edges:";
    for (const auto& e : g.edges)
        os << " (" << point_name(e.from_point) << e.from_r << "," << point_name(e.to_point)
           << e.to_r << ")";
    os << "\nconnected components:\n";
    for (std::size_t k = 0; k < g.components.size(); ++k) {
        os << "  component " << k + 1 << ": ";
        for (std::size_t i = 0; i < g.components[k].size(); ++i) {
            if (i) os << " - ";
            os << "P" << g.components[k][i];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace sl2hecke
