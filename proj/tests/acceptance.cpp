// Acceptance report: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "om/cli.hpp"
#include "om/io.hpp"
#include "om/mh_complex.hpp"
#include "om/os_algebra.hpp"
#include "om/salvetti.hpp"
#include "om/topes.hpp"
#include "oracles.hpp"
#include "path_oracle.hpp"

using namespace om;

namespace {

// Collects the first failed expectation of a criterion.
struct Check {
  std::string failure;
  bool expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
    return ok;
  }
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

const std::vector<std::string>& fixtures() { return standard_fixtures(); }

void axioms(Check& c) {
  for (const auto& name : fixtures()) {
    const OrientedMatroid m = generate_fixture(name);
    c.expect(verify_axioms(m.covectors()).pass(), name + " fails the axioms");

    std::vector<SignVector> no_zero;
    for (const auto& x : m.covectors())
      if (!x.is_zero()) no_zero.push_back(x);
    const AxiomReport r0 = verify_axioms(no_zero);
    c.expect(r0.failed == Axiom::V0, name + " without 0 does not fail V0");

    const SignVector dropped = m.topes().front();
    std::vector<SignVector> no_tope;
    for (const auto& x : m.covectors())
      if (x != dropped) no_tope.push_back(x);
    const AxiomReport r1 = verify_axioms(no_tope);
    c.expect(r1.failed == Axiom::V1 && r1.x == -dropped,
             name + " without " + dropped.to_string() + " gives " + r1.describe());
  }
}

void covector_counts(Check& c) {
  const std::vector<std::tuple<std::string, std::size_t, std::vector<std::size_t>>> expected = {
      {"generic:3:2", 13, {1, 6, 6}}, {"generic:4:3", 51, {1, 12, 24, 14}}};
  for (const auto& [name, count, heights] : expected) {
    const OrientedMatroid m = generate_fixture(name);
    c.expect(m.covectors().size() == count, name + " has " + std::to_string(m.covectors().size()) + " covectors");
    c.expect(m.height_profile() == heights, name + " heights " + show(m.height_profile()));

    const RationalArrangement a = fixture_arrangement(parse_fixture_spec(name));
    std::vector<std::vector<oracle::Q>> normals;
    for (const auto& row : a.normals) normals.push_back(std::vector<oracle::Q>(row.begin(), row.end()));
    auto brute = oracle::feasible_sign_strings(normals, a.dimension);
    std::vector<std::string> got;
    for (const auto& x : m.covectors()) got.push_back(x.to_string());
    std::sort(brute.begin(), brute.end());
    std::sort(got.begin(), got.end());
    c.expect(got == brute, name + " differs from the feasibility oracle");
  }
}

void f_vectors(Check& c) {
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> expected = {
      {"boolean:1", {2, 2}},
      {"boolean:2", {4, 8, 4}},
      {"generic:3:2", {6, 12, 6}},
      {"generic:4:3", {14, 48, 48, 14}},
  };
  for (const auto& [name, f] : expected) {
    const FVectorEuler fe = f_vector_and_euler(SalvettiComplex(generate_fixture(name)));
    c.expect(fe.f == f, name + " f=" + show(fe.f));
  }
  for (const auto& name : fixtures()) {
    const OrientedMatroid m = generate_fixture(name);
    const FVectorEuler fe = f_vector_and_euler(SalvettiComplex(m));
    c.expect(fe.euler == 0, name + " Euler characteristic " + std::to_string(fe.euler));
    c.expect(fe.f.front() == m.topes().size() && fe.f.back() == m.topes().size(), name + " f0/f_rank != #topes");
  }
}

void homology_vs_nbc(Check& c) {
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> expected = {
      {"boolean:1", {1, 1}},
      {"boolean:2", {1, 2, 1}},
      {"generic:3:2", {1, 3, 2}},
      {"generic:4:3", {1, 4, 6, 3}},
  };
  for (const auto& [name, b] : expected) {
    const GrComparison gr = gr_comparison(generate_fixture(name));
    c.expect(gr.homology_ranks == b && gr.os_betti == b, name + " H=" + show(gr.homology_ranks));
  }
  for (const auto& name : fixtures()) {
    const GrComparison gr = gr_comparison(generate_fixture(name));
    c.expect(gr.homology_ranks == gr.os_betti,
             name + " H=" + show(gr.homology_ranks) + " b=" + show(gr.os_betti));
    for (const auto& t : gr.torsion) c.expect(t.empty(), name + " has torsion");
  }
}

void nerve(Check& c) {
  for (const auto& name : fixtures()) {
    const NerveReport r = nerve_check(generate_fixture(name));
    c.expect(r.identical, name + " nerve differs: " + r.witness);
  }
}

void mh(Check& c) {
  for (const auto& name : fixtures()) {
    const OrientedMatroid m = generate_fixture(name);
    const std::array<std::pair<std::string, CWPoset>, 2> complexes = {
        std::pair{std::string("salvetti"), CWPoset::from_salvetti(SalvettiComplex(m))},
        std::pair{std::string("dual"), dual_complex(m)}};
    for (const auto& [kind, q] : complexes) {
      const MHReport r = mh_check(q);
      c.expect(r.mh.pass, name + " " + kind + " is not MH");
      c.expect(r.local_distances_agree, name + " " + kind + " local distances differ");
    }
  }
  std::istringstream in(read_file("fixtures/triangle.cw"));
  c.expect(!qmh_check(parse_cw(in)).pass, "triangle passes QMH");
}

void tope_paths(Check& c) {
  for (const auto& name : fixtures()) {
    const OrientedMatroid m = generate_fixture(name);
    const DistanceAgreement d = distance_agreement_check(m);
    c.expect(d.agree, name + " distances disagree");
    for (const auto& t : m.topes())
      for (const auto& s : m.topes()) {
        const auto paths = minimal_positive_paths(m, t, s);
        for (const auto& p : paths) c.expect(crosses_separation_once(p), name + " path crosses twice");
        const auto expected = oracle::path_count(m, t, s);
        c.expect(paths.size() == expected && count_minimal_positive_paths(m, t, s) == expected,
                 name + " path count " + t.to_string() + "->" + s.to_string());
      }
    c.expect(antipodal_extension_check(m), name + " antipodal extension fails");
  }
}

void simplicial_lattice(Check& c) {
  for (const auto& name : fixtures()) {
    const OrientedMatroid m = generate_fixture(name);
    const LatticeEquivalenceReport r = lattice_equivalence_check(m);
    c.expect(r.simplicial == r.all_lattices, name + " simplicial and lattice disagree");
    const FixtureSpec spec = parse_fixture_spec(name);
    if (spec.kind == FixtureKind::Boolean || m.rank() == 2)
      c.expect(r.simplicial, name + " should be simplicial");
    if (name == "generic:4:3" || name == "generic:5:3") c.expect(!r.simplicial, name + " should not be simplicial");
  }
}

void retraction(Check& c) {
  for (const auto& name : fixtures()) {
    const OrientedMatroid m = generate_fixture(name);
    for (const auto& t : m.topes()) c.expect(retraction_check(m, t), name + " retraction fails at " + t.to_string());
    c.expect(chain_determination_check(SalvettiComplex(m)), name + " chain determination fails");
  }
}

std::vector<std::vector<std::string>> cli_suite() {
  std::vector<std::vector<std::string>> suite;
  for (const auto& name : fixtures()) {
    const OrientedMatroid m = generate_fixture(name);
    const std::string from = m.topes().front().to_string();
    const std::string to = m.topes().back().to_string();
    suite.push_back({"verify", "--fixture", name});
    suite.push_back({"salvetti", "--fixture", name});
    suite.push_back({"homology", "--fixture", name});
    suite.push_back({"os-betti", "--fixture", name});
    suite.push_back({"gr-compare", "--fixture", name, "--json"});
    suite.push_back({"mh-check", "--fixture", name});
    suite.push_back({"mh-check", "--fixture", name, "--complex", "dual", "--json"});
    suite.push_back({"topes", "--fixture", name, "--simplicial"});
    suite.push_back({"topes", "--fixture", name, "--poset", "--base", from});
    suite.push_back({"paths", "--fixture", name, "--from", from, "--to", to});
    suite.push_back({"gen", "--fixture", name, "--format", "cov"});
  }
  suite.push_back({"mh-check", "--in", "fixtures/remark_nomh.cw"});
  suite.push_back({"mh-check", "--in", "fixtures/remark_nolmh.cw"});
  return suite;
}

std::string run_in_process(const std::vector<std::vector<std::string>>& suite) {
  std::ostringstream report;
  for (const auto& args : suite) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    report << "$";
    for (const auto& a : args) report << ' ' << a;
    report << "\nexit " << code << '\n' << out.str() << err.str();
  }
  return report.str();
}

std::string run_binary(const std::vector<std::vector<std::string>>& suite) {
  std::string report;
  for (const auto& args : suite) {
    std::string command = OMSAL_BINARY;
    for (const auto& a : args) command += " '" + a + "'";
    command += " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + command);
    std::array<char, 4096> buffer{};
    std::size_t got;
    report += command + '\n';
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) report.append(buffer.data(), got);
    const int status = pclose(pipe);
    report += "exit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + '\n';
  }
  return report;
}

void determinism(Check& c) {
  const auto suite = cli_suite();
  const std::string first = run_in_process(suite);
  c.expect(first == run_in_process(suite), "in-process reports differ");
  const std::string a = run_binary(suite);
  c.expect(a == run_binary(suite), "binary reports differ");
  c.expect(a.find("\nexit 2\n") == std::string::npos && a.find("\nexit -1\n") == std::string::npos, "a suite command rejected its input");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"covector axioms and mutated negatives", axioms},
      {"covector counts against the feasibility oracle", covector_counts},
      {"Salvetti f-vectors and Euler characteristic", f_vectors},
      {"homology equals nbc counts, no torsion", homology_vs_nbc},
      {"nerve equals the Salvetti order complex", nerve},
      {"MH checks on Salvetti and dual complexes", mh},
      {"tope distances and minimal positive paths", tope_paths},
      {"simplicial iff all tope posets are lattices", simplicial_lattice},
      {"retraction and chain determination", retraction},
      {"deterministic CLI reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("threw ") + e.what());
    }
    const bool ok = c.failure.empty();
    failed += !ok;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!ok) std::cout << "  [" << c.failure << "]";
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
