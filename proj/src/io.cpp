#include "hstar/io.hpp"

#include <json.hpp>

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "hstar/error.hpp"
#include "hstar/lattice.hpp"

namespace hstar {

std::string rat_to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

namespace {

Int int_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty numeric token");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("bare sign is not a number");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad integer token '" + s + "'");
    return Int(s);
}

} // namespace

Rat rat_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(num, den);
}

PolytopeFile parse_polytope_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    enum class Section { None, Lattice, Vertices };
    Section sec = Section::None;
    PolytopeFile f;
    bool have_dim = false;

    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;

        if (toks[0] == "dim") {
            if (toks.size() != 2) throw ParseError("dim takes one value");
            f.dim = static_cast<int>(int_from_string(toks[1]).convert_to<long long>());
            if (f.dim < 1) throw ParseError("dimension must be positive");
            have_dim = true;
            continue;
        }
        if (toks[0] == "lattice") {
            if (toks.size() != 1) throw ParseError("lattice header takes no values");
            sec = Section::Lattice;
            continue;
        }
        if (toks[0] == "vertices") {
            if (toks.size() != 1) throw ParseError("vertices header takes no values");
            sec = Section::Vertices;
            continue;
        }

        if (!have_dim) throw ParseError("dim must come before data rows");
        if (static_cast<int>(toks.size()) != f.dim)
            throw ParseError("row has " + std::to_string(toks.size()) +
                             " entries, expected " + std::to_string(f.dim));
        if (sec == Section::Lattice) {
            RatVec row(f.dim);
            for (int j = 0; j < f.dim; ++j) row[j] = rat_from_string(toks[j]);
            f.lattice_rows.push_back(std::move(row));
        } else if (sec == Section::Vertices) {
            IntVec row(f.dim);
            for (int j = 0; j < f.dim; ++j) row[j] = int_from_string(toks[j]);
            f.vertices.push_back(std::move(row));
        } else {
            throw ParseError("data row outside a section");
        }
    }
    if (!have_dim) throw ParseError("missing dim line");
    if (f.vertices.empty()) throw ParseError("missing vertices");
    return f;
}

namespace {

Int int_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return int_from_string(v.get<std::string>());
    throw ParseError("expected integer or integer string");
}

Rat rat_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw ParseError("expected number or fraction string");
}

} // namespace

PolytopeFile parse_polytope_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("missing integer field 'dim'");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("missing array field 'vertices'");

    PolytopeFile f;
    f.dim = j["dim"].get<int>();
    if (f.dim < 1) throw ParseError("dimension must be positive");

    if (j.contains("lattice")) {
        if (!j["lattice"].is_array()) throw ParseError("'lattice' must be an array");
        for (const auto& row : j["lattice"]) {
            if (!row.is_array() || static_cast<int>(row.size()) != f.dim)
                throw ParseError("lattice row length must equal dim");
            RatVec r(f.dim);
            for (int c = 0; c < f.dim; ++c) r[c] = rat_from_json(row[c]);
            f.lattice_rows.push_back(std::move(r));
        }
    }
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != f.dim)
            throw ParseError("vertex row length must equal dim");
        IntVec r(f.dim);
        for (int c = 0; c < f.dim; ++c) r[c] = int_from_json(row[c]);
        f.vertices.push_back(std::move(r));
    }
    if (f.vertices.empty()) throw ParseError("missing vertices");
    return f;
}

PolytopeFile parse_polytope(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' ? parse_polytope_json(text) : parse_polytope_text(text);
    }
    throw ParseError("empty input");
}

std::string serialize_polytope_text(const PolytopeFile& f) {
    std::ostringstream out;
    out << "dim " << f.dim << "\n";
    if (!f.lattice_rows.empty()) {
        out << "lattice\n";
        for (const RatVec& row : f.lattice_rows) {
            for (int j = 0; j < f.dim; ++j)
                out << (j ? " " : "") << rat_to_string(row[j]);
            out << "\n";
        }
    }
    out << "vertices\n";
    for (const IntVec& row : f.vertices) {
        for (int j = 0; j < f.dim; ++j) out << (j ? " " : "") << row[j].str();
        out << "\n";
    }
    return out.str();
}

std::string serialize_polytope_json(const PolytopeFile& f) {
    nlohmann::json j;
    j["dim"] = f.dim;
    if (!f.lattice_rows.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const RatVec& row : f.lattice_rows) {
            nlohmann::json r = nlohmann::json::array();
            for (const Rat& x : row) r.push_back(rat_to_string(x));
            rows.push_back(std::move(r));
        }
        j["lattice"] = std::move(rows);
    }
    nlohmann::json verts = nlohmann::json::array();
    const Int lo = Int(std::numeric_limits<long long>::min());
    const Int hi = Int(std::numeric_limits<long long>::max());
    for (const IntVec& row : f.vertices) {
        nlohmann::json r = nlohmann::json::array();
        for (const Int& x : row) {
            if (x >= lo && x <= hi) r.push_back(x.convert_to<long long>());
            else r.push_back(x.str());
        }
        verts.push_back(std::move(r));
    }
    j["vertices"] = std::move(verts);
    return j.dump(2);
}

LatticePolytope to_polytope(const PolytopeFile& f) {
    if (f.lattice_rows.empty()) return LatticePolytope(f.dim, f.vertices);

    std::vector<RatVec> gens;
    for (int i = 0; i < f.dim; ++i) {
        RatVec e(f.dim, Rat(0));
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    for (const RatVec& row : f.lattice_rows) gens.push_back(row);
    AffineLattice N(RatVec(f.dim, Rat(0)), gens);

    std::vector<RatVec> rverts;
    rverts.reserve(f.vertices.size());
    for (const IntVec& v : f.vertices) rverts.push_back(to_rat(v));
    LatticePolytope p(f.dim, rebase(rverts, N));

    // record the plain Z^dim description lattice in the new coordinates
    std::vector<RatVec> zgens;
    for (int i = 0; i < f.dim; ++i) {
        RatVec e(f.dim, Rat(0));
        e[i] = 1;
        auto z = N.linear_coords(e);
        if (!z) throw std::logic_error("standard basis escaped its refinement");
        zgens.push_back(to_rat(*z));
    }
    p.set_refinement(AffineLattice(RatVec(f.dim, Rat(0)), zgens));
    return p;
}

void write_report(std::ostream& out, const std::vector<CheckReport>& reports) {
    int pass = 0, fail = 0;
    for (const CheckReport& r : reports) {
        out << "CHECK " << r.name << (r.passed ? " PASS" : " FAIL");
        if (!r.branch.empty()) out << " branch=" << r.branch;
        for (const auto& [label, value] : r.witnesses) {
            std::string v = value;
            for (std::size_t i = 0; i < v.size();)
                if (v[i] == ' ') v.erase(i, 1); else ++i;
            out << " " << label << "=" << v;
        }
        out << "\n";
        if (r.passed) ++pass; else ++fail;
    }
    out << "TOTAL pass=" << pass << " fail=" << fail << "\n";
}

} // namespace hstar
