#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hstar/checks.hpp"
#include "hstar/error.hpp"
#include "hstar/harness.hpp"
#include "hstar/io.hpp"

namespace {

using namespace hstar;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LatticePolytope load(const std::string& path) {
    return to_polytope(parse_polytope(read_file(path)));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text;
}

PolytopeFile to_file(const LatticePolytope& p) {
    PolytopeFile f;
    f.dim = p.dim();
    f.vertices = p.vertices();
    return f;
}

Int parse_int_arg(const std::string& s, const std::string& where) {
    try {
        Rat r = rat_from_string(s);
        if (!is_integer(r))
            throw ParseError("not an integer");
        return numerator(r);
    } catch (const hstar::ParseError&) {
        throw CLI::ValidationError(where, "expected an integer, got '" + s + "'");
    }
}

std::pair<int, int> parse_shard(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos)
        throw CLI::ValidationError("--shard", "expected i/n");
    try {
        int i = std::stoi(s.substr(0, slash));
        int n = std::stoi(s.substr(slash + 1));
        if (n < 1 || i < 0 || i >= n) throw std::out_of_range("range");
        return {i, n};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--shard", "expected i/n with 0 <= i < n");
    }
}

int run_hstar(const std::string& path, const std::string& engine) {
    LatticePolytope p = load(path);
    bool want_interp = engine == "interp" || engine == "both";
    bool want_group = engine == "group" || engine == "both";

    std::optional<HStarVector> hi, hg;
    if (want_interp) {
        hi = hstar_interp(p);
        std::cout << "h* (counting) = " << hi->to_string() << "\n";
    }
    if (want_group) {
        if (is_simplex(p)) {
            hg = hstar_group(p);
            std::cout << "h* (group)    = " << hg->to_string() << "\n";
        } else if (engine == "group") {
            throw NotSimplex("group engine requires a simplex");
        } else {
            std::cout << "h* (group)    = skipped, not a simplex\n";
        }
    }
    if (hi && hg) {
        if (hi->same_polynomial(*hg)) {
            std::cout << "engines agree\n";
        } else {
            std::cout << "ENGINES DISAGREE\n";
            return 1;
        }
    }
    return 0;
}

int run_check(const std::string& name, const std::string& path) {
    LatticePolytope p = load(path);
    std::vector<CheckReport> reports;
    if (name == "scott") {
        HStarVector h = hstar_auto(p);
        reports.push_back(scott_universal(h.at_or_zero(1), h.at_or_zero(2)));
    } else if (name == "scott2") {
        HStarVector h = hstar_auto(p);
        reports.push_back(scott_dim2(h.at_or_zero(1), h.at_or_zero(2)));
    } else if (name == "hibi") {
        HStarVector h = hstar_auto(p);
        reports.push_back(hibi_lower(h));
        reports.push_back(hibi_interior(h));
    } else if (name == "stanley") {
        reports.push_back(stanley(hstar_auto(p)));
    } else if (name == "gapless") {
        HStarVector h = hstar_auto(p);
        SpanningResult sp = spanning(p);
        HStarVector hs = hstar_auto(sp.polytope);
        reports.push_back(spanning_gapless(hs));
        CheckReport rel;
        rel.name = "spanning-bounds";
        rel.note("index", sp.index);
        rel.note("hstar", h.to_string());
        rel.note("spanning-hstar", hs.to_string());
        rel.require(hs.at_or_zero(1) == h.at_or_zero(1));
        for (int i = 2; i <= h.poly_dim(); ++i)
            rel.require(hs.at_or_zero(i) <= h.at_or_zero(i));
        reports.push_back(std::move(rel));
    } else if (name == "main") {
        reports.push_back(main_theorem(p));
    } else if (name == "divisibility") {
        reports.push_back(divisibility_lawrence(p));
    } else if (name == "identities") {
        reports.push_back(identity_checks(p, hstar_auto(p)));
    } else {
        throw CLI::ValidationError(
            "check", "unknown check '" + name +
                         "' (scott, scott2, hibi, stanley, gapless, main, "
                         "divisibility, identities)");
    }
    write_report(std::cout, reports);
    for (const CheckReport& r : reports)
        if (!r.passed) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact h*-vectors of lattice polytopes"};
    app.require_subcommand(1);
    int rc = 0;

    // hstar <file> [--engine both]
    std::string hs_file, hs_engine = "both";
    auto* cmd_hstar = app.add_subcommand("hstar", "compute the h*-vector");
    cmd_hstar->add_option("file", hs_file, "polytope file")->required();
    cmd_hstar->add_option("--engine", hs_engine, "interp, group, or both")
        ->check(CLI::IsMember({"interp", "group", "both"}));
    cmd_hstar->callback([&]() { rc = run_hstar(hs_file, hs_engine); });

    // count <file> [--dilate k] [--interior]
    std::string ct_file;
    int ct_dilate = 1;
    bool ct_interior = false;
    auto* cmd_count = app.add_subcommand("count", "count lattice points of a dilation");
    cmd_count->add_option("file", ct_file)->required();
    cmd_count->add_option("--dilate", ct_dilate)->check(CLI::NonNegativeNumber);
    cmd_count->add_flag("--interior", ct_interior);
    cmd_count->callback([&]() {
        LatticePolytope p = load(ct_file);
        Int n = ct_interior ? count_interior(p, ct_dilate)
                            : count_points(p, ct_dilate);
        std::cout << n.str() << "\n";
    });

    // spanning <file> [--out f]
    std::string sp_file, sp_out;
    auto* cmd_span = app.add_subcommand(
        "spanning", "rewrite over the lattice generated by the polytope's points");
    cmd_span->add_option("file", sp_file)->required();
    cmd_span->add_option("--out", sp_out, "write the rewritten polytope here");
    cmd_span->callback([&]() {
        SpanningResult sp = spanning(load(sp_file));
        std::cout << "index " << sp.index.str() << "\n";
        emit(serialize_polytope_text(to_file(sp.polytope)), sp_out);
    });

    // facets <file>
    std::string fc_file;
    auto* cmd_facets = app.add_subcommand("facets", "print the facet inequalities");
    cmd_facets->add_option("file", fc_file)->required();
    cmd_facets->callback([&]() {
        HRep h = facets(load(fc_file));
        for (const auto& f : h.facets) {
            for (std::size_t j = 0; j < f.normal.size(); ++j)
                std::cout << (j ? " " : "") << f.normal[j].str();
            std::cout << " <= " << f.offset.str() << "\n";
        }
    });

    // construct <kind> [args...] [--out f] [--json]
    std::string cs_kind, cs_out;
    std::vector<std::string> cs_args;
    bool cs_json = false;
    auto* cmd_make = app.add_subcommand(
        "construct", "build a polytope: pyramid <file> | join <a> <b> | "
                     "lawrence <h0> <h1> ... | exceptional <d> | concentrated <s> <b>");
    cmd_make->add_option("kind", cs_kind)->required();
    cmd_make->add_option("args", cs_args, "construction arguments");
    cmd_make->add_option("--out", cs_out);
    cmd_make->add_flag("--json", cs_json, "emit JSON instead of text");
    cmd_make->callback([&]() {
        std::optional<LatticePolytope> p;
        if (cs_kind == "pyramid") {
            if (cs_args.size() != 1)
                throw CLI::ValidationError("construct", "pyramid takes one file");
            p = pyramid(load(cs_args[0]));
        } else if (cs_kind == "join") {
            if (cs_args.size() != 2)
                throw CLI::ValidationError("construct", "join takes two files");
            p = join(load(cs_args[0]), load(cs_args[1]));
        } else if (cs_kind == "lawrence") {
            if (cs_args.empty())
                throw CLI::ValidationError("construct", "lawrence takes heights");
            std::vector<Int> hs;
            for (const auto& a : cs_args)
                hs.push_back(parse_int_arg(a, "construct"));
            p = lawrence_prism(hs);
        } else if (cs_kind == "exceptional") {
            if (cs_args.size() != 1)
                throw CLI::ValidationError("construct", "exceptional takes a dimension");
            p = exceptional_simplex(
                parse_int_arg(cs_args[0], "construct").convert_to<int>());
        } else if (cs_kind == "concentrated") {
            if (cs_args.size() != 2)
                throw CLI::ValidationError("construct", "concentrated takes s and b");
            p = concentrated_simplex(
                parse_int_arg(cs_args[0], "construct").convert_to<int>(),
                parse_int_arg(cs_args[1], "construct"));
        } else {
            throw CLI::ValidationError("construct", "unknown kind '" + cs_kind + "'");
        }
        PolytopeFile f = to_file(*p);
        emit(cs_json ? serialize_polytope_json(f) + "\n"
                     : serialize_polytope_text(f),
             cs_out);
    });

    // check <name> <file>
    std::string ck_name, ck_file;
    auto* cmd_check = app.add_subcommand("check", "run a named inequality check");
    cmd_check->add_option("name", ck_name)->required();
    cmd_check->add_option("file", ck_file)->required();
    cmd_check->callback([&]() { rc = run_check(ck_name, ck_file); });

    // classify <file>
    std::string cl_file;
    auto* cmd_classify = app.add_subcommand(
        "classify", "recognize the shape of a degree <= 1 polytope");
    cmd_classify->add_option("file", cl_file)->required();
    cmd_classify->callback([&]() {
        DegreeOneClass c = classify_degree_le1(load(cl_file));
        switch (c.tag) {
            case DegreeOneClass::Tag::ExceptionalSimplex:
                std::cout << "exceptional-simplex\n";
                break;
            case DegreeOneClass::Tag::LawrencePrism: {
                std::cout << "lawrence-prism heights";
                for (const Int& a : c.heights) std::cout << " " << a.str();
                std::cout << "\n";
                break;
            }
            case DegreeOneClass::Tag::NotDegreeLeOne:
                std::cout << "degree-above-one\n";
                break;
        }
    });

    // enumerate --dim d --max-vol v [--shard i/n] [--count-only]
    int en_dim = 2;
    std::string en_vol = "1", en_shard;
    bool en_count_only = false;
    auto* cmd_enum = app.add_subcommand(
        "enumerate", "stream the Hermite vertex matrices of all simplices "
                     "conv{0, rows} up to the volume bound");
    cmd_enum->add_option("--dim", en_dim)->required()->check(CLI::PositiveNumber);
    cmd_enum->add_option("--max-vol", en_vol)->required();
    cmd_enum->add_option("--shard", en_shard, "i/n to take every n-th");
    cmd_enum->add_flag("--count-only", en_count_only);
    cmd_enum->callback([&]() {
        EnumSpec spec;
        spec.dim = en_dim;
        spec.max_volume = parse_int_arg(en_vol, "enumerate");
        if (!en_shard.empty()) {
            auto [i, n] = parse_shard(en_shard);
            spec.shard_index = i;
            spec.shard_total = n;
        }
        unsigned long long count = 0;
        enumerate_simplices(spec, [&](const IntMatrix& m) {
            ++count;
            if (en_count_only) return;
            for (int i = 0; i < m.rows(); ++i) {
                if (i) std::cout << "; ";
                for (int j = 0; j < m.cols(); ++j)
                    std::cout << (j ? " " : "") << m(i, j).str();
            }
            std::cout << "\n";
        });
        if (en_count_only) std::cout << count << "\n";
    });

    // sweep --dim d --max-vol v [--jobs j] [--shard i/n]
    int sw_dim = 2, sw_jobs = 1;
    std::string sw_vol = "1", sw_shard;
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "check the degree-3-vanishing bound and the inequality net "
                 "over all enumerated simplices");
    cmd_sweep->add_option("--dim", sw_dim)->required()->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--max-vol", sw_vol)->required();
    cmd_sweep->add_option("--jobs", sw_jobs)->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--shard", sw_shard, "i/n manual shard (forces --jobs 1)");
    cmd_sweep->callback([&]() {
        SweepSummary s;
        if (!sw_shard.empty()) {
            EnumSpec spec;
            spec.dim = sw_dim;
            spec.max_volume = parse_int_arg(sw_vol, "sweep");
            auto [i, n] = parse_shard(sw_shard);
            spec.shard_index = i;
            spec.shard_total = n;
            s = sweep_main_theorem(spec);
        } else {
            s = sweep_parallel(sw_dim, parse_int_arg(sw_vol, "sweep"), sw_jobs);
        }
        std::cout << "total " << s.total << "\n";
        std::cout << "h3-zero " << s.h3_zero << "\n";
        std::cout << "scott-pass " << s.scott_pass << "\n";
        std::cout << "violations " << s.violations.size() << "\n";
        std::cout << "inequality-failures " << s.inequality_failures << "\n";
        auto dump = [&](const char* tag, const std::vector<IntMatrix>& ms) {
            for (const IntMatrix& m : ms) {
                std::cout << tag;
                for (int i = 0; i < m.rows(); ++i) {
                    std::cout << (i ? "; " : " ");
                    for (int j = 0; j < m.cols(); ++j)
                        std::cout << (j ? " " : "") << m(i, j).str();
                }
                std::cout << "\n";
            }
        };
        dump("violation:", s.violations);
        dump("inequality:", s.inequality_witnesses);
        if (!s.violations.empty() || s.inequality_failures > 0) rc = 1;
    });

    // verify-reference
    auto* cmd_verify = app.add_subcommand(
        "verify-reference", "check the frozen worked-example values");
    cmd_verify->callback([&]() {
        std::vector<CheckReport> reports = {verify_reference_values()};
        write_report(std::cout, reports);
        if (!reports[0].passed) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hstar::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hstar::NotSimplex& e) {
        // asking the group engine for a non-simplex is an input error,
        // not a mathematical failure
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hstar::Degenerate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
