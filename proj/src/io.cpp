#include "gentle/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gentle {

int ParseResult::exit_code() const {
    if (ok()) return 0;
    for (const auto& d : diagnostics)
        if (d.kind == Diagnostic::Kind::Parse) return 2;
    return 1;
}

namespace {

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '\'';
    });
}

} // namespace

ParseResult parse_presentation(const std::string& text) {
    ParseResult res;
    RawPresentation raw;
    std::map<std::string, VertexId> vmap;
    std::map<std::string, ArrowId> amap;
    auto parse_err = [&](int line, const std::string& m) {
        res.diagnostics.push_back({Diagnostic::Kind::Parse, line, m});
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;
        if (directive == "vertex") {
            std::string id;
            bool any = false;
            while (ls >> id) {
                any = true;
                if (!valid_id(id)) {
                    parse_err(lineno, "bad vertex id '" + id + "'");
                    continue;
                }
                if (vmap.count(id)) {
                    parse_err(lineno, "duplicate vertex id '" + id + "'");
                    continue;
                }
                vmap[id] = static_cast<VertexId>(raw.quiver.vertices.size());
                raw.quiver.vertices.push_back(id);
            }
            if (!any) parse_err(lineno, "vertex directive without ids");
        } else if (directive == "arrow") {
            std::string id, src, tgt;
            if (!(ls >> id >> src >> tgt)) {
                parse_err(lineno, "arrow directive needs: arrow <id> <src> <tgt>");
                continue;
            }
            if (!valid_id(id)) {
                parse_err(lineno, "bad arrow id '" + id + "'");
                continue;
            }
            if (amap.count(id) || vmap.count(id)) {
                parse_err(lineno, "duplicate id '" + id + "'");
                continue;
            }
            auto sv = vmap.find(src);
            auto tv = vmap.find(tgt);
            if (sv == vmap.end()) {
                parse_err(lineno, "arrow '" + id + "': undeclared source '" + src + "'");
                continue;
            }
            if (tv == vmap.end()) {
                parse_err(lineno, "arrow '" + id + "': undeclared target '" + tgt + "'");
                continue;
            }
            amap[id] = static_cast<ArrowId>(raw.quiver.arrows.size());
            raw.quiver.arrows.push_back({id, sv->second, tv->second});
        } else if (directive == "rel") {
            std::string a, b;
            if (!(ls >> a >> b)) {
                parse_err(lineno, "rel directive needs: rel <a1> <a2>");
                continue;
            }
            auto ai = amap.find(a);
            auto bi = amap.find(b);
            if (ai == amap.end()) {
                parse_err(lineno, "rel: undeclared arrow '" + a + "'");
                continue;
            }
            if (bi == amap.end()) {
                parse_err(lineno, "rel: undeclared arrow '" + b + "'");
                continue;
            }
            const Arrow& fa = raw.quiver.arrows[ai->second];
            const Arrow& sa = raw.quiver.arrows[bi->second];
            if (fa.target != sa.source) {
                parse_err(lineno, "rel " + a + " " + b + ": target of '" + a +
                                      "' is not the source of '" + b + "'");
                continue;
            }
            raw.relations.push_back({ai->second, bi->second});
        } else {
            parse_err(lineno, "unknown directive '" + directive + "'");
        }
    }
    if (raw.quiver.vertices.empty())
        parse_err(lineno == 0 ? 1 : lineno, "no vertices declared");
    if (!res.diagnostics.empty()) return res;

    for (const auto& e : structural_errors(raw))
        res.diagnostics.push_back({Diagnostic::Kind::Parse, 0, e.message});
    if (!res.diagnostics.empty()) return res;

    ValidationResult val = validate_gentle(raw);
    if (!val.ok()) {
        for (const auto& v : val.violations)
            res.diagnostics.push_back({Diagnostic::Kind::Gentleness, 0, v.message});
        return res;
    }
    res.presentation = std::move(*val.presentation);
    return res;
}

ParseResult parse_presentation_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        ParseResult res;
        res.diagnostics.push_back({Diagnostic::Kind::Parse, 0, "cannot open '" + path + "'"});
        return res;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_presentation(ss.str());
}

std::string serialize(const RawPresentation& raw) {
    std::ostringstream out;
    out << "vertex";
    for (const auto& v : raw.quiver.vertices) out << ' ' << v;
    out << '\n';
    for (const auto& a : raw.quiver.arrows)
        out << "arrow " << a.name << ' ' << raw.quiver.vertices[a.source] << ' '
            << raw.quiver.vertices[a.target] << '\n';
    for (const auto& r : raw.relations)
        out << "rel " << raw.quiver.arrows[r.first].name << ' '
            << raw.quiver.arrows[r.second].name << '\n';
    return out.str();
}

std::string serialize(const GentlePresentation& A) {
    RawPresentation raw{A.quiver(), A.relations()};
    return serialize(raw);
}

std::string dim_json(Dim d) {
    nlohmann::json j;
    if (d.is_infinite())
        j["value"] = "infinity";
    else
        j["value"] = d.value();
    return j.dump();
}

std::string ag_json(const AGInvariant& phi) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [m, n] : phi.pairs) pairs.push_back({m, n});
    nlohmann::json j;
    j["pairs"] = pairs;
    return j.dump();
}

} // namespace gentle
