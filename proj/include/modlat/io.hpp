#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "modlat/classify.hpp"
#include "modlat/graph.hpp"
#include "modlat/module.hpp"

namespace modlat {

class SpecParseError : public std::runtime_error {
public:
    SpecParseError(const std::string& msg, unsigned line, unsigned col)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line(line),
          col(col) {}
    unsigned line, col;
};

namespace detail {

// Tolerant reader for the spec-file format: JSON-shaped values with bare
// keys, bare words, and '#' comments. Tracks line/column for diagnostics.
class SpecLexer {
public:
    explicit SpecLexer(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool consume_if(char c) {
        if (!eof() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string string_token() {
        expect('"');
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            out += text_[pos_];
            advance();
        }
        if (pos_ >= text_.size()) fail("unterminated string");
        advance();  // closing quote
        return out;
    }

    std::string bareword() {
        skip_space();
        std::string out;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '-')) {
            out += text_[pos_];
            advance();
        }
        if (out.empty()) fail("expected a name or number");
        return out;
    }

    [[noreturn]] void fail(const std::string& msg) { throw SpecParseError(msg, line_, col_); }

    unsigned line() const { return line_; }
    unsigned col() const { return col_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    unsigned line_ = 1, col_ = 1;
};

inline nlohmann::json parse_value(SpecLexer& lex) {
    const char c = lex.peek();
    if (c == '{') {
        lex.expect('{');
        nlohmann::json obj = nlohmann::json::object();
        if (!lex.consume_if('}')) {
            while (true) {
                const std::string key = lex.peek() == '"' ? lex.string_token() : lex.bareword();
                lex.expect(':');
                obj[key] = parse_value(lex);
                if (lex.consume_if('}')) break;
                lex.expect(',');
            }
        }
        return obj;
    }
    if (c == '[') {
        lex.expect('[');
        nlohmann::json arr = nlohmann::json::array();
        if (!lex.consume_if(']')) {
            while (true) {
                arr.push_back(parse_value(lex));
                if (lex.consume_if(']')) break;
                lex.expect(',');
            }
        }
        return arr;
    }
    if (c == '"') return lex.string_token();
    const std::string word = lex.bareword();
    if (word == "true") return true;
    if (word == "false") return false;
    try {
        size_t used = 0;
        const long long v = std::stoll(word, &used);
        if (used == word.size()) return v;
    } catch (const std::exception&) {
    }
    return word;  // bare name
}

inline uint64_t want_uint(const nlohmann::json& j, const char* what, SpecLexer& lex) {
    if (!j.is_number_integer() || j.get<long long>() < 0) lex.fail(std::string(what) + " must be a nonnegative integer");
    return static_cast<uint64_t>(j.get<long long>());
}

}  // namespace detail

// Parse the module-spec text format:
//   semisimple: [ {type: "S", mult: 2, q: 2}, ... ]
//   explicit: { moduli: [4, 2], action: [[[1,0],[1,1]]] }
inline ModuleSpec parse_spec_text(const std::string& text) {
    detail::SpecLexer lex(text);
    const std::string key = lex.peek() == '"' ? lex.string_token() : lex.bareword();
    lex.expect(':');
    const nlohmann::json value = detail::parse_value(lex);
    if (!lex.eof()) lex.fail("trailing content after the module spec");

    if (key == "semisimple") {
        if (!value.is_array() || value.empty()) lex.fail("semisimple needs a component list");
        std::vector<SemisimpleComponent> comps;
        for (const auto& c : value) {
            if (!c.is_object() || !c.contains("type") || !c.contains("mult") || !c.contains("q"))
                lex.fail("component needs type, mult and q");
            SemisimpleComponent comp{c["type"].is_string() ? c["type"].get<std::string>()
                                                           : c["type"].dump(),
                                     static_cast<unsigned>(detail::want_uint(c["mult"], "mult", lex)),
                                     Field::of_size(static_cast<unsigned>(
                                         detail::want_uint(c["q"], "q", lex)))};
            comps.push_back(std::move(comp));
        }
        return ModuleSpec::semisimple(std::move(comps));
    }
    if (key == "explicit") {
        if (!value.is_object() || !value.contains("moduli")) lex.fail("explicit needs moduli");
        AbelianPresentation pres;
        for (const auto& m : value["moduli"])
            pres.moduli.push_back(static_cast<unsigned>(detail::want_uint(m, "modulus", lex)));
        if (value.contains("action")) {
            for (const auto& mat : value["action"]) {
                ActionMatrix A;
                for (const auto& row : mat) {
                    std::vector<long long> r;
                    for (const auto& x : row) {
                        if (!x.is_number_integer()) lex.fail("action entries must be integers");
                        r.push_back(x.get<long long>());
                    }
                    A.push_back(std::move(r));
                }
                pres.action.push_back(std::move(A));
            }
        }
        return ModuleSpec::explicit_module(std::move(pres));
    }
    lex.fail("top-level key must be 'semisimple' or 'explicit'");
}

inline ModuleSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str());
}

inline std::string serialize_spec(const ModuleSpec& spec) {
    std::ostringstream out;
    if (spec.is_semisimple_model()) {
        out << "semisimple: [ ";
        for (size_t i = 0; i < spec.components().size(); ++i) {
            const auto& c = spec.components()[i];
            if (i) out << ", ";
            out << "{type: \"" << c.type_id << "\", mult: " << c.mult << ", q: " << c.field.q()
                << "}";
        }
        out << " ]\n";
    } else {
        const auto& p = spec.presentation();
        out << "explicit: { moduli: [";
        for (size_t i = 0; i < p.moduli.size(); ++i) out << (i ? ", " : "") << p.moduli[i];
        out << "]";
        if (!p.action.empty()) {
            out << ", action: [";
            for (size_t k = 0; k < p.action.size(); ++k) {
                out << (k ? ", " : "") << "[";
                for (size_t i = 0; i < p.action[k].size(); ++i) {
                    out << (i ? "," : "") << "[";
                    for (size_t j = 0; j < p.action[k][i].size(); ++j)
                        out << (j ? "," : "") << p.action[k][i][j];
                    out << "]";
                }
                out << "]";
            }
            out << "]";
        }
        out << " }\n";
    }
    return out.str();
}

// Canonical display label: RREF rows per component (semisimple) or the
// nontrivial normal-form generator rows (explicit). Entries joined by '.',
// rows by ';', components by '|'.
inline std::string submodule_label(const ModuleSpec& V, const Submodule& s) {
    std::ostringstream out;
    if (V.is_semisimple_model()) {
        for (size_t c = 0; c < s.bases.size(); ++c) {
            if (c) out << '|';
            const FqMatrix& b = s.bases[c];
            if (b.rows == 0) {
                out << '0';
                continue;
            }
            for (unsigned r = 0; r < b.rows; ++r) {
                if (r) out << ';';
                for (unsigned j = 0; j < b.cols; ++j) out << (j ? "." : "") << int(b.at(r, j));
            }
        }
        return out.str();
    }
    const auto& P = V.presentation();
    bool any = false;
    for (unsigned i = 0; i < P.t(); ++i) {
        const auto& row = s.nf.rows[i];
        bool trivial = static_cast<unsigned>(row[i]) == P.moduli[i];
        for (unsigned j = 0; j < P.t(); ++j)
            if (j != i && row[j] % P.moduli[j] != 0) trivial = false;
        if (trivial) continue;
        if (any) out << ';';
        any = true;
        for (unsigned j = 0; j < P.t(); ++j)
            out << (j ? "." : "") << (((row[j] % P.moduli[j]) + P.moduli[j]) % P.moduli[j]);
    }
    return any ? out.str() : "0";
}

// Deterministic DOT export: vertices in canonical order, labels quoted.
inline std::string graph_to_dot(const SubmoduleLattice& L, const IntersectionGraph& g) {
    std::ostringstream out;
    out << "graph intersection {\n";
    for (unsigned v = 0; v < g.n; ++v)
        out << "  \"" << submodule_label(L.ambient, L.members[g.member_index[v]]) << "\";\n";
    for (unsigned u = 0; u < g.n; ++u)
        for (int v : g.neighbors[u])
            if (u < static_cast<unsigned>(v))
                out << "  \"" << submodule_label(L.ambient, L.members[g.member_index[u]])
                    << "\" -- \""
                    << submodule_label(L.ambient, L.members[g.member_index[v]]) << "\";\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json graph_to_json(const SubmoduleLattice& L, const IntersectionGraph& g) {
    nlohmann::json j;
    j["schema_version"] = "1";
    j["vertices"] = nlohmann::json::array();
    for (unsigned v = 0; v < g.n; ++v) {
        const Submodule& s = L.members[g.member_index[v]];
        j["vertices"].push_back(
            {{"id", v}, {"label", submodule_label(L.ambient, s)}, {"length", s.length}});
    }
    j["edges"] = nlohmann::json::array();
    for (unsigned u = 0; u < g.n; ++u)
        for (int v : g.neighbors[u])
            if (u < static_cast<unsigned>(v)) j["edges"].push_back({u, v});
    return j;
}

inline nlohmann::json invariants_to_json(const SubmoduleLattice& L, const InvariantReport& r) {
    const IntersectionGraph g = build_graph(L);
    nlohmann::json j;
    j["schema_version"] = "1";
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["components"] = r.components;
    j["diameters"] = r.diameters;
    j["diameter_le_2"] = r.diameter_le_2;
    j["cut_vertices"] = nlohmann::json::array();
    for (unsigned v : r.cut_vertex_ids)
        j["cut_vertices"].push_back(submodule_label(L.ambient, L.members[g.member_index[v]]));
    j["cut_edges"] = nlohmann::json::array();
    for (const auto& [u, v] : r.cut_edge_ids)
        j["cut_edges"].push_back({submodule_label(L.ambient, L.members[g.member_index[u]]),
                                  submodule_label(L.ambient, L.members[g.member_index[v]])});
    if (r.girth) j["girth"] = *r.girth;
    else j["girth"] = nullptr;
    j["bipartite"] = r.bipartite;
    if (r.gamma) j["gamma"] = *r.gamma;
    else j["gamma"] = "skipped";
    if (r.chi) j["chi"] = *r.chi;
    else j["chi"] = "skipped";
    if (r.omega) j["omega"] = *r.omega;
    else j["omega"] = "skipped";
    if (r.planar) j["planar"] = *r.planar;
    else j["planar"] = "skipped";

    nlohmann::json verdicts;
    verdicts["edgeless"] = r.verdicts.edgeless;
    if (r.verdicts.connected) verdicts["connected"] = *r.verdicts.connected;
    verdicts["has_cut_vertex"] = r.verdicts.has_cut_vertex;
    verdicts["has_cut_edge"] = r.verdicts.has_cut_edge;
    verdicts["acyclic"] = r.verdicts.acyclic;
    verdicts["bipartite"] = r.verdicts.acyclic;
    verdicts["no_k3"] = r.verdicts.no_k3;
    verdicts["no_k4"] = r.verdicts.no_k4;
    verdicts["no_k5"] = r.verdicts.no_k5;
    verdicts["planar"] = r.verdicts.planar;
    verdicts["gamma"] = r.verdicts.gamma;
    if (r.verdicts.chi_applicable) {
        if (r.verdicts.chi) verdicts["chi"] = r.verdicts.chi->str();
        else verdicts["chi"] = "open-case";
    }
    j["classifier"] = verdicts;

    nlohmann::json agree;
    const auto put = [&](const char* name, const std::optional<bool>& v) {
        if (v) agree[name] = *v;
    };
    put("edgeless", r.edgeless_match);
    put("connected", r.connected_match);
    put("cut_vertices", r.cut_vertex_match);
    put("cut_edges", r.cut_edge_match);
    put("girth", r.girth_match);
    put("bipartite", r.bipartite_match);
    put("gamma", r.gamma_match);
    put("chi", r.chi_match);
    put("k3", r.k3_match);
    put("k4", r.k4_match);
    put("k5", r.k5_match);
    put("planar", r.planar_match);
    j["agreement"] = agree;
    return j;
}

}  // namespace modlat
