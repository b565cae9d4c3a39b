#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace om {

/// Largest ground set a SignVector can hold.
inline constexpr int kMaxGroundSize = 32;

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
char to_char(Sign s);

/// Subset of the ground set. Element indices are zero-based internally; the
/// one-based view is only produced for reports.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}
  static ElementSet of(std::initializer_list<int> zero_based);
  static ElementSet full(int n) {
    return ElementSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  bool contains(int e) const { return (bits_ >> e) & 1u; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  void insert(int e) { bits_ |= (1u << e); }
  void erase(int e) { bits_ &= ~(1u << e); }
  int min_element() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const;            // zero-based, ascending
  std::vector<int> one_based() const;           // for reports
  std::string to_string() const;                // "{1,3}"

  friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend bool operator==(ElementSet, ElementSet) = default;
  // size first, then bit pattern; gives the natural reading order for flats
  friend bool operator<(ElementSet a, ElementSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits_ < b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// A word of length n over {+,0,-}. Element e (zero-based) is stored as bit e
/// of either the plus or the minus mask.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(int n);
  SignVector(int n, std::uint32_t plus, std::uint32_t minus);

  /// Parses the textual form [+\-0]{n}, element 1 leftmost.
  static SignVector parse(std::string_view text);

  int size() const { return n_; }
  Sign operator[](int e) const {
    return ((plus_ >> e) & 1u) ? Sign::Plus : ((minus_ >> e) & 1u) ? Sign::Minus : Sign::Zero;
  }
  void set(int e, Sign s);

  std::uint32_t plus_bits() const { return plus_; }
  std::uint32_t minus_bits() const { return minus_; }
  ElementSet support() const { return ElementSet(plus_ | minus_); }
  ElementSet zero_set() const { return ElementSet::full(n_) - support(); }
  bool is_zero() const { return (plus_ | minus_) == 0; }
  bool has_full_support() const { return support() == ElementSet::full(n_); }

  SignVector operator-() const { return SignVector(n_, minus_, plus_); }
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  /// Canonical order: lexicographic on the textual form, so '+' < '-' < '0'.
  friend bool operator<(const SignVector& a, const SignVector& b);

 private:
  int n_ = 0;
  std::uint32_t plus_ = 0;
  std::uint32_t minus_ = 0;
};

/// (X o Y)_e = X_e if X_e != 0, else Y_e.
SignVector compose(const SignVector& x, const SignVector& y);

/// {e : X_e = -Y_e != 0}
ElementSet separation_set(const SignVector& x, const SignVector& y);

/// Y <= X in the conformal order, i.e. Y_e in {0, X_e} for all e.
bool conforms(const SignVector& y, const SignVector& x);

/// Applies a relabeling of the ground set (old element e goes to perm[e]) and
/// then reverses signs on `reorient` (given in the new labels).
SignVector relabel(const SignVector& x, const std::vector<int>& perm, ElementSet reorient);

struct SignVectorHash {
  std::size_t operator()(const SignVector& x) const noexcept {
    std::uint64_t h = (std::uint64_t(x.plus_bits()) << 32) | x.minus_bits();
    h ^= std::uint64_t(x.size()) * 0x9E3779B97F4A7C15ull;
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace om
