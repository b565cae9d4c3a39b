#include "om/rational.hpp"

#include <utility>

#include "om/error.hpp"

namespace om {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_token(s)) throw Error(Errc::ParseError, "not a number: \"" + std::string(s) + "\"");
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(RationalMatrix& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(token));
  const BigInt num = parse_integer(token.substr(0, slash));
  std::string_view den_text = token.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(Errc::ParseError, "signed denominator in \"" + std::string(token) + "\"");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in \"" + std::string(token) + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

int rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows.front().size());
  return static_cast<int>(row_reduce(rows, cols).size());
}

std::vector<RationalVector> kernel_basis(RationalMatrix rows, int cols) {
  const auto pivots = row_reduce(rows, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(static_cast<std::size_t>(cols), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace om
