#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "om/error.hpp"
#include "om/sign_vector.hpp"

namespace om {
inline std::ostream& operator<<(std::ostream& out, Errc code) {
  return out << (static_cast<int>(code) < 0 ? std::string("no error") : std::string(to_string(code)));
}
}  // namespace om

inline om::SignVector sv(const std::string& s) { return om::SignVector::parse(s); }

inline std::vector<om::SignVector> svs(const std::vector<std::string>& list) {
  std::vector<om::SignVector> out;
  for (const auto& s : list) out.push_back(sv(s));
  return out;
}

template <class F>
om::Errc error_code(F&& f) {
  try {
    f();
  } catch (const om::Error& e) {
    return e.code();
  }
  return om::Errc{-1};
}
