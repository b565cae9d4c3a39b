#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "om/mh_complex.hpp"
#include "om/oriented_matroid.hpp"

namespace om {

// Line-based text formats. Blank lines and '#' comments are skipped
// everywhere; parse errors carry the line number.

/// `.arr`: "rank <l>" then one normal per line, l rationals each.
RationalArrangement parse_arrangement(std::istream& in);
void write_arrangement(std::ostream& out, const RationalArrangement& arrangement);

/// `.cov`: one sign string per line.
std::vector<SignVector> parse_sign_vectors(std::istream& in);
/// Parses and verifies; AxiomFailure carries the witness.
OrientedMatroid parse_covectors(std::istream& in);
void write_covectors(std::ostream& out, const OrientedMatroid& m);

/// `.chi`: "chirotope r=<r> n=<n>" then the colex sign string.
Chirotope parse_chirotope(std::istream& in);
void write_chirotope(std::ostream& out, const Chirotope& chi);

/// `.cw`: "cell <id> dim <d>" lines then "cover <lower> <upper>" lines.
/// Ids are arbitrary tokens; cells keep file order.
CWPoset parse_cw(std::istream& in);
void write_cw(std::ostream& out, const CWPoset& q);

/// Reads a whole file; ParseError if it cannot be opened.
std::string read_file(const std::string& path);

enum class FixtureKind { Boolean, Generic, Braid, NonPappus, File };

struct FixtureSpec {
  std::string name;  // as given
  FixtureKind kind = FixtureKind::Boolean;
  int n = 0;
  int dimension = 0;  // generic only
  std::string path;   // file only
};

/// "boolean:n", "generic:n:l", "braid:n", "nonpappus" or "file:<path>";
/// a bare path ending in .arr/.cov/.chi is taken as a file. UnknownFixture
/// otherwise.
FixtureSpec parse_fixture_spec(const std::string& text);

/// Normals for the arrangement-backed kinds.
RationalArrangement fixture_arrangement(const FixtureSpec& spec);

/// The non-Pappus chirotope: the degenerate realizable configuration with
/// the basis sign of the last concurrent triple flipped.
Chirotope nonpappus_chirotope();

/// Ground-set cap from OM_SALVETTI_MAX_N (default 12).
int max_ground_size();

/// Every result has passed verify_axioms. Raises SizeLimit above the cap.
OrientedMatroid generate_fixture(const FixtureSpec& spec);
OrientedMatroid generate_fixture(const std::string& spec);

/// Specs of the shipped fixture list.
const std::vector<std::string>& standard_fixtures();

}  // namespace om
