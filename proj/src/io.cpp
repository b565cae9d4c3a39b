#include "om/io.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "om/error.hpp"

namespace om {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) fail_at(line, "bad integer '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    fail_at(line, "bad integer '" + token + "'");
  }
}

int parse_positive(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 1) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(Errc::UnknownFixture, "bad size in fixture '" + spec + "'");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

RationalArrangement parse_arrangement(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw Error(Errc::ParseError, "empty arrangement");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "rank") fail_at(head.number, "expected 'rank <l>'");
  RationalArrangement a;
  a.dimension = parse_int(head.tokens[1], head.number);
  if (a.dimension < 1) fail_at(head.number, "rank must be positive");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (static_cast<int>(line.tokens.size()) != a.dimension) {
      fail_at(line.number, "expected " + std::to_string(a.dimension) + " entries");
    }
    RationalVector row;
    bool zero = true;
    for (const auto& t : line.tokens) {
      try {
        row.push_back(parse_rational(t));
      } catch (const Error& e) {
        fail_at(line.number, e.what());
      }
      zero = zero && row.back() == 0;
    }
    if (zero) throw Error(Errc::ZeroNormal, "line " + std::to_string(line.number) + ": zero normal");
    a.normals.push_back(std::move(row));
  }
  return a;
}

void write_arrangement(std::ostream& out, const RationalArrangement& arrangement) {
  out << "rank " << arrangement.dimension << '\n';
  for (const auto& row : arrangement.normals) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << to_string(row[j]);
    out << '\n';
  }
}

std::vector<SignVector> parse_sign_vectors(std::istream& in) {
  std::vector<SignVector> out;
  for (const auto& line : content_lines(in)) {
    if (line.tokens.size() != 1) fail_at(line.number, "expected one sign string");
    try {
      out.push_back(SignVector::parse(line.tokens[0]));
    } catch (const Error& e) {
      fail_at(line.number, e.what());
    }
    if (out.back().size() != out.front().size()) fail_at(line.number, "sign string length differs");
  }
  if (out.empty()) throw Error(Errc::EmptyInput, "no sign vectors");
  return out;
}

OrientedMatroid parse_covectors(std::istream& in) { return OrientedMatroid::from_covectors(parse_sign_vectors(in)); }

void write_covectors(std::ostream& out, const OrientedMatroid& m) {
  for (const auto& x : m.covectors()) out << x.to_string() << '\n';
}

Chirotope parse_chirotope(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw Error(Errc::ParseError, "empty chirotope");
  const auto& head = lines.front();
  int r = -1;
  int n = -1;
  if (head.tokens.size() != 3 || head.tokens[0] != "chirotope") fail_at(head.number, "expected 'chirotope r=<r> n=<n>'");
  for (std::size_t i = 1; i < 3; ++i) {
    const auto& t = head.tokens[i];
    if (t.rfind("r=", 0) == 0) r = parse_int(t.substr(2), head.number);
    else if (t.rfind("n=", 0) == 0) n = parse_int(t.substr(2), head.number);
    else fail_at(head.number, "unexpected '" + t + "'");
  }
  if (r < 1 || n < r) fail_at(head.number, "need 1 <= r <= n");
  std::string signs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (const auto& t : lines[i].tokens) signs += t;
  }
  const auto subsets = Chirotope::colex_subsets(n, r);
  const int last = lines.size() > 1 ? lines.back().number : head.number;
  if (signs.size() != subsets.size()) {
    fail_at(last, "expected " + std::to_string(subsets.size()) + " signs, got " + std::to_string(signs.size()));
  }
  std::vector<Sign> values;
  for (char c : signs) {
    if (c == '+') values.push_back(Sign::Plus);
    else if (c == '-') values.push_back(Sign::Minus);
    else if (c == '0') values.push_back(Sign::Zero);
    else fail_at(last, std::string("bad sign '") + c + "'");
  }
  return Chirotope(r, n, values);
}

void write_chirotope(std::ostream& out, const Chirotope& chi) {
  out << "chirotope r=" << chi.rank() << " n=" << chi.ground_size() << '\n';
  for (Sign s : chi.colex_values()) out << to_char(s);
  out << '\n';
}

CWPoset parse_cw(std::istream& in) {
  std::map<std::string, std::size_t> ids;
  std::vector<std::string> labels;
  std::vector<int> dims;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  auto lookup = [&](const std::string& id, int line) {
    const auto it = ids.find(id);
    if (it == ids.end()) fail_at(line, "unknown cell '" + id + "'");
    return it->second;
  };
  for (const auto& line : content_lines(in)) {
    const auto& t = line.tokens;
    if (t.size() == 4 && t[0] == "cell" && t[2] == "dim") {
      if (!covers.empty()) fail_at(line.number, "cell after cover lines");
      if (!ids.emplace(t[1], labels.size()).second) fail_at(line.number, "duplicate cell '" + t[1] + "'");
      labels.push_back(t[1]);
      dims.push_back(parse_int(t[3], line.number));
      if (dims.back() < 0) fail_at(line.number, "negative dimension");
    } else if (t.size() == 3 && t[0] == "cover") {
      covers.emplace_back(lookup(t[1], line.number), lookup(t[2], line.number));
    } else {
      fail_at(line.number, "expected 'cell <id> dim <d>' or 'cover <id> <id>'");
    }
  }
  if (labels.empty()) throw Error(Errc::EmptyInput, "no cells");
  return CWPoset(FinitePoset::from_covers(labels.size(), covers, labels), dims);
}

void write_cw(std::ostream& out, const CWPoset& q) {
  for (std::size_t c = 0; c < q.size(); ++c) out << "cell " << q.label(c) << " dim " << q.dim(c) << '\n';
  for (const auto& [lo, hi] : q.poset().covers()) out << "cover " << q.label(lo) << ' ' << q.label(hi) << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FixtureSpec parse_fixture_spec(const std::string& text) {
  FixtureSpec spec;
  spec.name = text;
  std::vector<std::string> parts;
  std::string part;
  std::istringstream split(text);
  while (std::getline(split, part, ':')) parts.push_back(part);
  if (parts.empty()) throw Error(Errc::UnknownFixture, "empty fixture name");
  const std::string& kind = parts[0];
  if (kind == "boolean" && parts.size() == 2) {
    spec.kind = FixtureKind::Boolean;
    spec.n = parse_positive(parts[1], text);
  } else if (kind == "generic" && parts.size() == 3) {
    spec.kind = FixtureKind::Generic;
    spec.n = parse_positive(parts[1], text);
    spec.dimension = parse_positive(parts[2], text);
    if (spec.dimension > spec.n) throw Error(Errc::UnknownFixture, "generic needs l <= n in '" + text + "'");
  } else if (kind == "braid" && parts.size() == 2) {
    spec.kind = FixtureKind::Braid;
    const int points = parse_positive(parts[1], text);
    if (points < 2) throw Error(Errc::UnknownFixture, "braid needs at least 2 coordinates");
    spec.n = points * (points - 1) / 2;
    spec.dimension = points - 1;
  } else if (kind == "nonpappus" && parts.size() == 1) {
    spec.kind = FixtureKind::NonPappus;
    spec.n = 9;
    spec.dimension = 3;
  } else if (kind == "file" && parts.size() >= 2) {
    spec.kind = FixtureKind::File;
    spec.path = text.substr(5);
  } else if (ends_with(text, ".arr") || ends_with(text, ".cov") || ends_with(text, ".chi")) {
    spec.kind = FixtureKind::File;
    spec.path = text;
  } else {
    throw Error(Errc::UnknownFixture, "unknown fixture '" + text + "'");
  }
  return spec;
}

RationalArrangement fixture_arrangement(const FixtureSpec& spec) {
  RationalArrangement a;
  switch (spec.kind) {
    case FixtureKind::Boolean:
      a.dimension = spec.n;
      for (int i = 0; i < spec.n; ++i) {
        RationalVector row(static_cast<std::size_t>(spec.n), Rational(0));
        row[static_cast<std::size_t>(i)] = 1;
        a.normals.push_back(row);
      }
      break;
    case FixtureKind::Generic:
      a.dimension = spec.dimension;
      for (int t = 1; t <= spec.n; ++t) {
        RationalVector row;
        Rational power = 1;
        for (int k = 0; k < spec.dimension; ++k, power *= t) row.push_back(power);
        a.normals.push_back(row);
      }
      break;
    case FixtureKind::Braid:
      a.dimension = spec.dimension;
      // e_i - e_j with the last coordinate dropped
      for (int i = 0; i <= spec.dimension; ++i) {
        for (int j = i + 1; j <= spec.dimension; ++j) {
          RationalVector row(static_cast<std::size_t>(spec.dimension), Rational(0));
          row[static_cast<std::size_t>(i)] = 1;
          if (j < spec.dimension) row[static_cast<std::size_t>(j)] = -1;
          a.normals.push_back(row);
        }
      }
      break;
    case FixtureKind::NonPappus:
      a.dimension = 3;
      for (const auto& row : std::vector<std::vector<int>>{{0, 1, 0},  {-1, 2, -4}, {-3, 2, 0},
                                                           {2, 1, -2}, {-5, 6, 0},  {2, 3, -6},
                                                           {-1, 1, 1}, {3, 1, -9},  {-1, 3, -2}}) {
        a.normals.push_back(RationalVector(row.begin(), row.end()));
      }
      break;
    case FixtureKind::File: {
      if (!ends_with(spec.path, ".arr")) throw Error(Errc::UnknownFixture, spec.path + " is not an arrangement");
      std::istringstream in(read_file(spec.path));
      return parse_arrangement(in);
    }
  }
  return a;
}

Chirotope nonpappus_chirotope() {
  FixtureSpec degenerate;
  degenerate.kind = FixtureKind::NonPappus;
  Chirotope chi = Chirotope::from_arrangement(fixture_arrangement(degenerate));
  // the ninth line keeps the first two concurrent points and misses the middle one
  const ElementSet flipped = ElementSet::of({4, 5, 8});
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    chi.set(flipped, s);
    const auto cocircuits = cocircuits_from_chirotope(chi);
    try {
      span_from_cocircuits(cocircuits);
      return chi;
    } catch (const Error& e) {
      if (e.code() != Errc::AxiomFailure && e.code() != Errc::NotGraded) throw;
    }
  }
  throw Error(Errc::AxiomFailure, "neither orientation of the flipped basis gives an oriented matroid");
}

int max_ground_size() {
  if (const char* env = std::getenv("OM_SALVETTI_MAX_N")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::logic_error&) {
    }
    throw Error(Errc::ParseError, std::string("bad OM_SALVETTI_MAX_N '") + env + "'");
  }
  return 12;
}

namespace {

void check_size(int n, const std::string& name) {
  const int cap = max_ground_size();
  if (n > cap) {
    throw Error(Errc::SizeLimit, name + " has " + std::to_string(n) + " elements; OM_SALVETTI_MAX_N is " +
                                     std::to_string(cap));
  }
}

}  // namespace

OrientedMatroid generate_fixture(const FixtureSpec& spec) {
  if (spec.kind != FixtureKind::File) check_size(spec.n, spec.name);
  switch (spec.kind) {
    case FixtureKind::NonPappus:
      return span_from_cocircuits(cocircuits_from_chirotope(nonpappus_chirotope()));
    case FixtureKind::File: {
      std::istringstream in(read_file(spec.path));
      if (ends_with(spec.path, ".cov")) {
        auto vectors = parse_sign_vectors(in);
        check_size(vectors.front().size(), spec.name);
        return OrientedMatroid::from_covectors(std::move(vectors));
      }
      if (ends_with(spec.path, ".chi")) {
        const Chirotope chi = parse_chirotope(in);
        check_size(chi.ground_size(), spec.name);
        return span_from_cocircuits(cocircuits_from_chirotope(chi));
      }
      const RationalArrangement a = fixture_arrangement(spec);
      check_size(static_cast<int>(a.normals.size()), spec.name);
      return from_arrangement(a);
    }
    default:
      return from_arrangement(fixture_arrangement(spec));
  }
}

OrientedMatroid generate_fixture(const std::string& spec) { return generate_fixture(parse_fixture_spec(spec)); }

const std::vector<std::string>& standard_fixtures() {
  static const std::vector<std::string> names = {"boolean:1",   "boolean:2",   "boolean:3",   "generic:3:2",
                                                 "braid:3",     "generic:4:3", "generic:5:3", "nonpappus"};
  return names;
}

}  // namespace om
