#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace om;

namespace {

std::vector<SignVector> all_of_length(int n) {
  std::vector<SignVector> out;
  for (const auto& s : oracle::all_sign_strings(n)) out.push_back(sv(s));
  return out;
}

// entrywise definitions, independent of the bitmask code
char compose_char(char x, char y) { return x != '0' ? x : y; }

}  // namespace

TEST_CASE("compose examples") {
  CHECK(compose(sv("+0-"), sv("-++")).to_string() == "++-");
  for (const auto& x : all_of_length(3)) CHECK(compose(x, sv("000")) == x);
  CHECK(compose(sv("0+0"), sv("-0-")).to_string() == "-+-");
  for (const auto& y : all_of_length(3)) CHECK(compose(sv("-+-"), y).to_string() == "-+-");
}

TEST_CASE("separation set examples") {
  CHECK(separation_set(sv("+0-"), sv("-++")).to_string() == "{1,3}");
  for (const auto& x : all_of_length(3)) CHECK(separation_set(x, x).empty());
  CHECK(separation_set(sv("++"), sv("--")).one_based() == std::vector<int>{1, 2});
}

TEST_CASE("conforms examples") {
  CHECK(conforms(sv("0+0"), sv("++-")));
  CHECK_FALSE(conforms(sv("+-0"), sv("++-")));
  for (const auto& x : all_of_length(3)) CHECK(conforms(sv("000"), x));
}

TEST_CASE("length mismatch") {
  CHECK(error_code([] { compose(sv("+0"), sv("+")); }) == Errc::LengthMismatch);
  CHECK(error_code([] { separation_set(sv("+0"), sv("+--")); }) == Errc::LengthMismatch);
  CHECK(error_code([] { conforms(sv(""), sv("0")); }) == Errc::LengthMismatch);
}

TEST_CASE("parse and print") {
  for (const auto& s : oracle::all_sign_strings(4)) CHECK(sv(s).to_string() == s);
  CHECK(error_code([] { sv("+x-"); }) == Errc::ParseError);
  CHECK(sv("+-0")[0] == Sign::Plus);
  CHECK(sv("+-0")[1] == Sign::Minus);
  CHECK(sv("+-0")[2] == Sign::Zero);
}

TEST_CASE("canonical order is lexicographic on the text with + < - < 0") {
  auto all = all_of_length(3);
  for (const auto& a : all)
    for (const auto& b : all) CHECK((a < b) == (a.to_string() < b.to_string()));
}

TEST_CASE("entrywise definitions, exhaustive to length 3") {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& x : all_of_length(n)) {
      const std::string xs = x.to_string();
      CHECK((-(-x)) == x);
      CHECK((x.support() | x.zero_set()) == ElementSet::full(n));
      CHECK((x.support() & x.zero_set()).empty());
      for (const auto& y : all_of_length(n)) {
        const std::string ys = y.to_string();
        std::string c;
        bool conform = true;
        std::vector<int> sep;
        for (int e = 0; e < n; ++e) {
          c += compose_char(xs[e], ys[e]);
          if (ys[e] != '0' && ys[e] != xs[e]) conform = false;
          if (xs[e] != '0' && ys[e] != '0' && xs[e] != ys[e]) sep.push_back(e + 1);
        }
        CHECK(compose(x, y).to_string() == c);
        CHECK(conforms(y, x) == conform);
        CHECK(separation_set(x, y).one_based() == sep);
        CHECK(separation_set(x, y) == separation_set(y, x));
      }
    }
  }
}

TEST_CASE("composition laws, exhaustive to length 3") {
  for (int n = 0; n <= 3; ++n) {
    const auto all = all_of_length(n);
    for (const auto& x : all) {
      CHECK(compose(x, x) == x);
      for (const auto& y : all) {
        const SignVector xy = compose(x, y);
        CHECK(conforms(x, xy));
        CHECK(xy.support() == (x.support() | y.support()));
        if (separation_set(x, y).empty()) CHECK(xy == compose(y, x));
        for (const auto& z : all) CHECK(compose(xy, z) == compose(x, compose(y, z)));
      }
    }
  }
}

TEST_CASE("conformal order is a partial order, exhaustive to length 3") {
  const auto all = all_of_length(3);
  for (const auto& x : all) {
    CHECK(conforms(x, x));
    for (const auto& y : all) {
      if (conforms(x, y) && conforms(y, x)) CHECK(x == y);
      for (const auto& z : all) {
        if (conforms(x, y) && conforms(y, z)) CHECK(conforms(x, z));
      }
    }
  }
}

TEST_CASE("relabel permutes then reorients") {
  // old element 0 -> 2, 1 -> 0, 2 -> 1
  const SignVector x = sv("+-0");
  CHECK(relabel(x, {2, 0, 1}, ElementSet()).to_string() == "-0+");
  CHECK(relabel(x, {2, 0, 1}, ElementSet::of({0})).to_string() == "+0+");
}

TEST_CASE("element sets") {
  const ElementSet s = ElementSet::of({0, 2});
  CHECK(s.to_string() == "{1,3}");
  CHECK(s.size() == 2);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.min_element() == 0);
  CHECK((s - ElementSet::of({0})).elements() == std::vector<int>{2});
  CHECK(ElementSet::of({1}) < ElementSet::of({0, 2}));
  CHECK(ElementSet().to_string() == "{}");
}
