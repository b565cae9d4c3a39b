#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "om/io.hpp"
#include "om/salvetti.hpp"
#include "om/simplicial.hpp"
#include "support.hpp"

using namespace om;

namespace {

std::vector<std::string> cell_strings(const std::vector<SalvettiCell>& cells) {
  std::vector<std::string> out;
  for (const auto& c : cells) out.push_back(c.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// the paper's rule, written out directly: [Y,S] <= [X,T] iff X <= Y and Y o T = S
bool rule(const SalvettiCell& lower, const SalvettiCell& upper) {
  return conforms(upper.covector, lower.covector) && compose(lower.covector, upper.tope) == lower.tope;
}

}  // namespace

TEST_CASE("Salvetti poset of the one-element OM") {
  const SalvettiComplex sal(generate_fixture("boolean:1"));
  CHECK(cell_strings(sal.cells()) == std::vector<std::string>{"[+,+]", "[-,-]", "[0,+]", "[0,-]"});
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const auto& ca = sal.cells()[a];
      const auto& cb = sal.cells()[b];
      const bool expected = a == b || (ca.dim == 0 && cb.dim == 1);
      CHECK(sal.poset().leq(a, b) == expected);
    }
  }
  std::ostringstream out;
  write_poset(out, sal);
  CHECK(out.str() == "0 + +\n0 - -\n1 0 +\n1 0 -\n1 3\n1 4\n2 3\n2 4\n");
}

TEST_CASE("cell counts") {
  CHECK(SalvettiComplex(generate_fixture("boolean:2")).cells().size() == 16);
  CHECK(f_vector_and_euler(SalvettiComplex(generate_fixture("boolean:2"))).f == std::vector<std::size_t>{4, 8, 4});
  CHECK(SalvettiComplex(generate_fixture("generic:3:2")).cells().size() == 24);
  const FVectorEuler one = f_vector_and_euler(SalvettiComplex(generate_fixture("boolean:1")));
  CHECK(one.f == std::vector<std::size_t>{2, 2});
  CHECK(one.euler == 0);
  const FVectorEuler lines = f_vector_and_euler(SalvettiComplex(generate_fixture("generic:3:2")));
  CHECK(lines.f == std::vector<std::size_t>{6, 12, 6});
  CHECK(lines.euler == 0);
  CHECK(f_vector_and_euler(SalvettiComplex(generate_fixture("generic:4:3"))).f ==
        std::vector<std::size_t>{14, 48, 48, 14});
}

TEST_CASE("cells, order rule and dimensions on every fixture") {
  for (const auto& name : standard_fixtures()) {
    CAPTURE(name);
    const SalvettiComplex sal(generate_fixture(name));
    const OrientedMatroid& m = sal.matroid();
    std::size_t expected_cells = 0;
    for (const auto& x : m.covectors())
      for (const auto& t : m.topes()) expected_cells += conforms(x, t);
    CHECK(sal.cells().size() == expected_cells);
    for (std::size_t i = 0; i < sal.cells().size(); ++i) {
      const auto& c = sal.cells()[i];
      CHECK(conforms(c.covector, c.tope));
      CHECK(c.dim == m.rank() - m.height(c.covector));
      CHECK((c.dim == 0) == (c.covector == c.tope));
      CHECK((c.dim == m.rank()) == c.covector.is_zero());
      CHECK(sal.poset().height(i) == c.dim);
    }
    if (sal.cells().size() <= 600) {
      for (std::size_t a = 0; a < sal.cells().size(); ++a)
        for (std::size_t b = 0; b < sal.cells().size(); ++b)
          REQUIRE(sal.poset().leq(a, b) == rule(sal.cells()[a], sal.cells()[b]));
    }
    const FVectorEuler fe = f_vector_and_euler(sal);
    CHECK(fe.f.front() == m.topes().size());
    CHECK(fe.f.back() == m.topes().size());
    CHECK(fe.euler == 0);
    CHECK(boundary_coherence_check(sal));
    CHECK(diamond_check(sal.poset()));
  }
}

TEST_CASE("boundary cells") {
  const OrientedMatroid one = generate_fixture("boolean:1");
  CHECK(cell_strings(boundary_cells({sv("0"), sv("+"), 1}, one)) == std::vector<std::string>{"[+,+]", "[-,-]"});
  CHECK(boundary_cells({sv("+"), sv("+"), 0}, one).empty());

  const OrientedMatroid b2 = generate_fixture("boolean:2");
  const auto bd = boundary_cells({sv("00"), sv("++"), 2}, b2);
  CHECK(bd.size() == 8);
  for (const auto& c : bd) CHECK(c.tope == compose(c.covector, sv("++")));
  CHECK(cell_strings(boundary_cells({sv("+0"), sv("++"), 1}, b2)) == std::vector<std::string>{"[++,++]", "[+-,+-]"});

  CHECK(error_code([&] { boundary_cells({sv("+0"), sv("-+"), 1}, b2); }) == Errc::InvalidCell);
  CHECK(error_code([&] { boundary_cells({sv("+"), sv("+"), 0}, b2); }) == Errc::InvalidCell);
}

TEST_CASE("oriented one-skeleton") {
  const OrientedSkeleton one = oriented_one_skeleton(generate_fixture("boolean:1"));
  CHECK(one.vertices == svs({"+", "-"}));
  REQUIRE(one.edges.size() == 2);
  CHECK(one.edges[0].cell.to_string() == "[0,+]");
  CHECK(one.edges[0].source == sv("+"));
  CHECK(one.edges[0].target == sv("-"));
  CHECK(one.edges[1].cell.to_string() == "[0,-]");
  CHECK(one.edges[1].target == sv("+"));

  const OrientedSkeleton b2 = oriented_one_skeleton(generate_fixture("boolean:2"));
  CHECK(b2.vertices.size() == 4);
  CHECK(b2.edges.size() == 8);
  for (const auto& e : b2.edges) CHECK(separation_set(e.source, e.target).size() == 1);

  for (const auto& name : standard_fixtures()) {
    CAPTURE(name);
    const OrientedSkeleton s = oriented_one_skeleton(generate_fixture(name));
    std::map<SignVector, int> in, out;
    for (const auto& e : s.edges) {
      ++out[e.source];
      ++in[e.target];
      CHECK(e.cell.tope == e.source);
      CHECK(conforms(e.cell.covector, e.target));
      // the reverse edge exists
      CHECK(std::any_of(s.edges.begin(), s.edges.end(), [&](const DirectedEdge& r) {
        return r.cell.covector == e.cell.covector && r.source == e.target && r.target == e.source;
      }));
    }
    CHECK(in == out);
  }
}

TEST_CASE("nerve equals the order complex") {
  const NerveReport one = nerve_check(generate_fixture("boolean:1"));
  CHECK(one.identical);
  CHECK(one.vertices == 4);
  CHECK(one.facets == 4);
  const NerveReport b2 = nerve_check(generate_fixture("boolean:2"));
  CHECK(b2.identical);
  CHECK(b2.vertices == 16);
  for (const auto& name : {"generic:3:2", "braid:3", "boolean:3", "generic:4:3"}) {
    CAPTURE(name);
    const OrientedMatroid m = generate_fixture(name);
    const NerveReport r = nerve_check(m);
    CHECK(r.identical);
    CHECK(r.cliques_are_chains);
    CHECK(r.facets == maximal_chains(SalvettiComplex(m).poset()).size());
  }
  // hexagonal top cells: 6 cells x 6 edges x 2 endpoints
  CHECK(nerve_check(generate_fixture("generic:3:2")).facets == 72);
}

TEST_CASE("retraction") {
  const OrientedMatroid one = generate_fixture("boolean:1");
  CHECK(retraction_check(one, sv("+")));
  CHECK(error_code([&] { retraction_check(one, sv("0")); }) == Errc::NotATope);
  for (const auto& name : {"boolean:2", "generic:3:2", "generic:4:3"}) {
    const OrientedMatroid m = generate_fixture(name);
    for (const auto& t : m.topes()) CHECK(retraction_check(m, t));
  }
}

TEST_CASE("chain determination and connectivity") {
  for (const auto& name : {"boolean:1", "boolean:2", "generic:3:2", "braid:3", "generic:4:3"}) {
    CAPTURE(name);
    const SalvettiComplex sal(generate_fixture(name));
    CHECK(chain_determination_check(sal));
    CHECK(betti_numbers(homology(order_complex(sal.poset()))).front() == 1);
  }
}

TEST_CASE("diamond check catches a non-diamond") {
  // 0 < 1 < 3 with only one middle element
  CHECK_FALSE(diamond_check(FinitePoset::from_covers(3, {{0, 1}, {1, 2}})));
  CHECK(diamond_check(FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
}
