#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hstar/polytope.hpp"
#include "hstar/report.hpp"

namespace hstar {

// On-disk polytope description: integer vertices in R^dim, optionally over
// the refinement of Z^dim by the extra generator rows.
struct PolytopeFile {
    int dim = 0;
    std::vector<RatVec> lattice_rows;
    std::vector<IntVec> vertices;
    bool operator==(const PolytopeFile&) const = default;
};

// Text form:
//   dim 2
//   lattice        (section optional)
//   1/2 1/2
//   vertices
//   0 0
//   3 0
//   0 3
// '#' starts a comment.  JSON form: {"dim": 2, "lattice": [["1/2","1/2"]],
// "vertices": [[0,0],[3,0],[0,3]]}, numeric entries may be strings.
PolytopeFile parse_polytope_text(const std::string& text);
PolytopeFile parse_polytope_json(const std::string& text);

// sniffs the format: leading '{' means JSON
PolytopeFile parse_polytope(const std::string& text);

std::string serialize_polytope_text(const PolytopeFile& f);
std::string serialize_polytope_json(const PolytopeFile& f);

// Builds the polytope, rewriting the vertices over the refined lattice when
// generator rows are present; the refinement field then records the plain
// Z^dim description lattice in the new coordinates.
LatticePolytope to_polytope(const PolytopeFile& f);

// CHECK <name> <PASS|FAIL> [branch=...] [label=value ...]
// TOTAL pass=<n> fail=<m>
void write_report(std::ostream& out, const std::vector<CheckReport>& reports);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);  // throws ParseError

} // namespace hstar
