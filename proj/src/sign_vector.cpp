#include "om/sign_vector.hpp"

#include "om/error.hpp"

namespace om {

namespace {

void require_same_length(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) {
    throw Error(Errc::LengthMismatch,
                x.to_string() + " has length " + std::to_string(x.size()) + ", " + y.to_string() +
                    " has length " + std::to_string(y.size()));
  }
}

int char_rank(Sign s) { return s == Sign::Plus ? 0 : s == Sign::Minus ? 1 : 2; }

}  // namespace

char to_char(Sign s) { return s == Sign::Plus ? '+' : s == Sign::Minus ? '-' : '0'; }

ElementSet ElementSet::of(std::initializer_list<int> zero_based) {
  ElementSet s;
  for (int e : zero_based) s.insert(e);
  return s;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::vector<int> ElementSet::one_based() const {
  auto out = elements();
  for (int& e : out) ++e;
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : one_based()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

SignVector::SignVector(int n) : n_(n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(Errc::SizeLimit, "sign vector length " + std::to_string(n) + " out of range");
  }
}

SignVector::SignVector(int n, std::uint32_t plus, std::uint32_t minus) : SignVector(n) {
  const std::uint32_t mask = ElementSet::full(n).bits();
  if ((plus & minus) != 0 || ((plus | minus) & ~mask) != 0) {
    throw Error(Errc::ParseError, "inconsistent sign masks");
  }
  plus_ = plus;
  minus_ = minus;
}

SignVector SignVector::parse(std::string_view text) {
  SignVector x(static_cast<int>(text.size()));
  for (int e = 0; e < x.n_; ++e) {
    switch (text[e]) {
      case '+': x.plus_ |= 1u << e; break;
      case '-': x.minus_ |= 1u << e; break;
      case '0': break;
      default:
        throw Error(Errc::ParseError, "invalid sign character '" + std::string(1, text[e]) +
                                          "' in \"" + std::string(text) + "\"");
    }
  }
  return x;
}

void SignVector::set(int e, Sign s) {
  const std::uint32_t bit = 1u << e;
  plus_ &= ~bit;
  minus_ &= ~bit;
  if (s == Sign::Plus) plus_ |= bit;
  if (s == Sign::Minus) minus_ |= bit;
}

std::string SignVector::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int e = 0; e < n_; ++e) out[e] = to_char((*this)[e]);
  return out;
}

bool operator<(const SignVector& a, const SignVector& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  const std::uint32_t diff = (a.plus_ ^ b.plus_) | (a.minus_ ^ b.minus_);
  if (diff == 0) return false;
  const int e = std::countr_zero(diff);
  return char_rank(a[e]) < char_rank(b[e]);
}

SignVector compose(const SignVector& x, const SignVector& y) {
  require_same_length(x, y);
  const std::uint32_t free = ~(x.plus_bits() | x.minus_bits());
  return SignVector(x.size(), x.plus_bits() | (y.plus_bits() & free),
                    x.minus_bits() | (y.minus_bits() & free));
}

ElementSet separation_set(const SignVector& x, const SignVector& y) {
  require_same_length(x, y);
  return ElementSet((x.plus_bits() & y.minus_bits()) | (x.minus_bits() & y.plus_bits()));
}

bool conforms(const SignVector& y, const SignVector& x) {
  require_same_length(x, y);
  return (y.plus_bits() & ~x.plus_bits()) == 0 && (y.minus_bits() & ~x.minus_bits()) == 0;
}

SignVector relabel(const SignVector& x, const std::vector<int>& perm, ElementSet reorient) {
  if (static_cast<int>(perm.size()) != x.size()) {
    throw Error(Errc::LengthMismatch, "permutation size does not match sign vector length");
  }
  SignVector out(x.size());
  for (int e = 0; e < x.size(); ++e) {
    Sign s = x[e];
    if (reorient.contains(perm[e])) s = -s;
    out.set(perm[e], s);
  }
  return out;
}

}  // namespace om
