#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "om/io.hpp"
#include "om/poset.hpp"
#include "om/salvetti.hpp"
#include "om/simplicial.hpp"
#include "om/smith.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace om;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

std::vector<std::size_t> ranks(const std::vector<HomologyGroup>& h) { return betti_numbers(h); }

std::vector<BigInt> big(std::initializer_list<long> v) { return std::vector<BigInt>(v.begin(), v.end()); }

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread, double density) {
  std::uniform_int_distribution<int> value(-spread, spread);
  std::uniform_real_distribution<double> coin(0, 1);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) < density) m(r, c) = value(rng);
  return m;
}

int oracle_rank(const IntMatrix& m) {
  std::vector<std::vector<oracle::Q>> q(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q[r][c] = oracle::Q(m(r, c));
  return oracle::rational_rank(q);
}

void check_smith(const IntMatrix& m) {
  const SmithDecomposition d = smith_decomposition(m);
  CHECK(d.left * m * d.right == d.diagonal);
  CHECK(abs(determinant(d.left)) == 1);
  CHECK(abs(determinant(d.right)) == 1);
  std::vector<BigInt> diag;
  for (std::size_t r = 0; r < d.diagonal.rows(); ++r) {
    for (std::size_t c = 0; c < d.diagonal.cols(); ++c) {
      if (r != c) CHECK(d.diagonal(r, c) == 0);
      else if (d.diagonal(r, c) != 0) diag.push_back(d.diagonal(r, c));
    }
  }
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] > 0);
    if (i + 1 < diag.size()) CHECK(diag[i + 1] % diag[i] == 0);
  }
  // nonzero diagonal entries come first
  for (std::size_t i = 0; i < diag.size(); ++i) CHECK(d.diagonal(i, i) != 0);
  const SmithForm dense = smith_normal_form(m);
  const SmithForm sparse = smith_normal_form(SparseIntMatrix::from_dense(m));
  CHECK(dense.invariant_factors == diag);
  CHECK(sparse.invariant_factors == diag);
  CHECK(dense.rank == diag.size());
  CHECK(static_cast<int>(dense.rank) == oracle_rank(m));
}

}  // namespace

TEST_CASE("build_poset examples") {
  const FinitePoset chain = FinitePoset::build(3, [](std::size_t a, std::size_t b) { return a <= b; }, {"a", "b", "c"});
  CHECK(chain.covers() == Pairs{{0, 1}, {1, 2}});
  CHECK(chain.height(0) == 0);
  CHECK(chain.height(1) == 1);
  CHECK(chain.height(2) == 2);
  CHECK(chain.bottom() == std::optional<std::size_t>(0));
  CHECK(chain.top() == std::optional<std::size_t>(2));

  const auto cov = svs({"0", "+", "-"});
  const FinitePoset faces =
      FinitePoset::build(3, [&](std::size_t a, std::size_t b) { return conforms(cov[a], cov[b]); });
  CHECK(faces.covers() == Pairs{{0, 1}, {0, 2}});
  CHECK(faces.is_graded());

  CHECK(error_code([] {
          FinitePoset::build(2, [](std::size_t, std::size_t) { return true; });
        }) == Errc::NotAntisymmetric);
  CHECK(error_code([] {
          // 0<1, 1<2 but not 0<2
          FinitePoset::build(3, [](std::size_t a, std::size_t b) { return a == b || b == a + 1; });
        }) == Errc::NotTransitive);
  CHECK(error_code([] {
          FinitePoset::build(2, [](std::size_t a, std::size_t b) { return a < b; });
        }) == Errc::NotReflexive);
  CHECK(error_code([] { FinitePoset::from_covers(2, {{0, 1}, {1, 0}}); }) == Errc::NotAntisymmetric);
}

TEST_CASE("witnesses name the offending elements") {
  try {
    FinitePoset::build(3, [](std::size_t a, std::size_t b) { return a == b || b == a + 1; }, {"x", "y", "z"});
    FAIL("expected NotTransitive");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("x") != std::string::npos);
    CHECK(std::string(e.what()).find("z") != std::string::npos);
  }
}

TEST_CASE("from_covers takes the transitive closure and reduces") {
  const FinitePoset p = FinitePoset::from_covers(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(p.leq(0, 3));
  CHECK_FALSE(p.leq(3, 0));
  CHECK(p.covers() == Pairs{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p.max_height() == 3);
  const FinitePoset d = p.dual();
  CHECK(d.leq(3, 0));
  CHECK(d.height(3) == 0);
}

TEST_CASE("graded and ungraded posets") {
  // 0 < 1 < 3 and 0 < 2, with 2 maximal: not graded
  CHECK_FALSE(FinitePoset::from_covers(4, {{0, 1}, {1, 3}, {0, 2}}).is_graded());
  CHECK(FinitePoset::from_covers(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}).is_graded());
}

TEST_CASE("order complex examples") {
  const FinitePoset chain = FinitePoset::from_covers(3, {{0, 1}, {1, 2}});
  const SimplicialComplex k = order_complex(chain);
  CHECK(k.facets() == std::vector<Simplex>{{0, 1, 2}});
  CHECK(k.f_vector() == std::vector<std::size_t>{3, 3, 1});

  const SimplicialComplex anti = order_complex(FinitePoset::from_covers(4, {}));
  CHECK(anti.facets().size() == 4);
  CHECK(anti.dimension() == 0);

  const SalvettiComplex sal(generate_fixture("boolean:1"));
  const SimplicialComplex cycle = order_complex(sal.poset());
  CHECK(cycle.f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(ranks(homology(cycle)) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("maximal chains") {
  const FinitePoset diamond = FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto chains = maximal_chains(diamond);
  CHECK(chains.size() == 2);
  CHECK(chains[0] == std::vector<std::size_t>{0, 1, 3});
  CHECK(chains[1] == std::vector<std::size_t>{0, 2, 3});
}

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors == big({1, 6}));
  const SmithForm zero = smith_normal_form(IntMatrix(3, 2));
  CHECK(zero.invariant_factors.empty());
  CHECK(zero.rank == 0);
  const SmithForm ones = smith_normal_form(IntMatrix{{1, 1}, {1, 1}});
  CHECK(ones.invariant_factors == big({1}));
  CHECK(ones.rank == 1);
  CHECK(smith_normal_form(IntMatrix()).invariant_factors.empty());
  CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).invariant_factors == big({2, 6, 12}));
  CHECK(determinant(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == -144);
}

TEST_CASE("Smith decompositions re-multiply, random matrices up to 50x50") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng), 1 + trial % 5, 0.3 + 0.1 * (trial % 7));
    CAPTURE(trial);
    check_smith(m);
  }
  SUBCASE("rank deficient products") {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t inner = 1 + trial % 4;
      const IntMatrix m = random_matrix(rng, 9, inner, 3, 1.0) * random_matrix(rng, inner, 11, 3, 1.0);
      check_smith(m);
      CHECK(smith_normal_form(m).rank <= inner);
    }
  }
  SUBCASE("large") {
    for (std::size_t n : {30u, 50u}) {
      const IntMatrix m = random_matrix(rng, n, n, 2, 0.15);
      check_smith(m);
      const SmithForm s = smith_normal_form(m);
      if (s.rank == n) {
        BigInt product = 1;
        for (const auto& f : s.invariant_factors) product *= f;
        CHECK(product == abs(determinant(m)));
      }
    }
    check_smith(random_matrix(rng, 50, 40, 1, 0.1));
  }
}

TEST_CASE("homology of small spaces") {
  CHECK(homology(SimplicialComplex(3, {{0, 1, 2}})) == std::vector<HomologyGroup>{{1, {}}, {0, {}}, {0, {}}});
  CHECK(ranks(homology(SimplicialComplex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}))) == std::vector<std::size_t>{1, 1});
  CHECK(ranks(homology(SimplicialComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}))) ==
        std::vector<std::size_t>{1, 0, 1});
  CHECK(ranks(homology(SimplicialComplex(1, {{0}}))) == std::vector<std::size_t>{1});
  CHECK(homology(SimplicialComplex()).empty());

  // six-vertex projective plane
  const SimplicialComplex rp2(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                  {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
  const auto h = homology(rp2);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == HomologyGroup{1, {}});
  CHECK(h[1] == HomologyGroup{0, big({2})});
  CHECK(h[2] == HomologyGroup{0, {}});
  CHECK(rp2.euler_characteristic() == 1);

  // seven-vertex torus
  std::vector<std::vector<std::size_t>> torus;
  for (std::size_t i = 0; i < 7; ++i) {
    torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
    torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  const SimplicialComplex t(7, torus);
  CHECK(ranks(homology(t)) == std::vector<std::size_t>{1, 2, 1});
  CHECK(t.f_vector() == std::vector<std::size_t>{7, 21, 14});
}

TEST_CASE("boundary of a boundary vanishes and Euler characteristic matches Betti numbers") {
  for (const auto& name : standard_fixtures()) {
    CAPTURE(name);
    const SimplicialComplex k = order_complex(SalvettiComplex(generate_fixture(name)).poset());
    const IntegerChainComplex cc = chain_complex(k);
    CHECK_NOTHROW(cc.check_boundary_squared());
    const auto h = homology(cc);
    long alternating = 0;
    for (std::size_t i = 0; i < h.size(); ++i) alternating += (i % 2 ? -1 : 1) * static_cast<long>(h[i].betti);
    CHECK(alternating == k.euler_characteristic());
  }
}

TEST_CASE("a non-boundary is rejected") {
  IntegerChainComplex bad;
  bad.dims = {1, 1, 1};
  bad.boundary = {SparseIntMatrix(0, 1), SparseIntMatrix::from_dense(IntMatrix{{1}}),
                  SparseIntMatrix::from_dense(IntMatrix{{1}})};
  CHECK(error_code([&] { bad.check_boundary_squared(); }) == Errc::ConsistencyFailure);
}

TEST_CASE("cones are acyclic: the face poset with a top adjoined") {
  for (const auto& name : {"boolean:2", "generic:3:2", "generic:4:3"}) {
    const OrientedMatroid m = generate_fixture(name);
    const FinitePoset& faces = m.face_poset();
    const std::size_t top = faces.size();
    Pairs covers = faces.covers();
    for (std::size_t t : faces.maximal_elements()) covers.push_back({t, top});
    const SimplicialComplex k = order_complex(FinitePoset::from_covers(top + 1, covers));
    auto h = ranks(homology(k));
    CHECK(h[0] == 1);
    for (std::size_t i = 1; i < h.size(); ++i) CHECK(h[i] == 0);
    // the proper part (topes and proper faces, no 0) is a sphere
    std::vector<std::size_t> proper;
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (!m.covectors()[i].is_zero()) proper.push_back(i);
    auto sphere = ranks(homology(order_complex(faces.subposet(proper))));
    CHECK(sphere.front() == (m.rank() == 1 ? 2u : 1u));
    CHECK(sphere.back() == (m.rank() == 1 ? 2u : 1u));
  }
}

TEST_CASE("is_lattice") {
  CHECK(is_lattice(FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})).is_lattice);
  const LatticeReport bowtie = is_lattice(FinitePoset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK_FALSE(bowtie.is_lattice);
  REQUIRE(bowtie.witness.has_value());
  CHECK(bowtie.witness->first != bowtie.witness->second);
  CHECK((bowtie.missing == "join" || bowtie.missing == "meet"));
  // with a bottom and a top adjoined it becomes a lattice only if joins are unique; they are not
  CHECK_FALSE(is_lattice(FinitePoset::from_covers(6, {{4, 0}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 5}, {3, 5}}))
                  .is_lattice);
}
