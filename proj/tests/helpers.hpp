#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "sasaki/oml.hpp"
#include "sasaki/subspace.hpp"

namespace testing {

inline sasaki::Element el(const sasaki::FiniteOml& L, const std::string& label) {
  const auto e = L.find_label(label);
  REQUIRE_MESSAGE(e.has_value(), "no element labelled " << label);
  return *e;
}

inline sasaki::ElementSet set_of(const sasaki::FiniteOml& L, const std::vector<std::string>& labels) {
  sasaki::ElementSet s(L.size());
  for (const auto& l : labels) s.insert(el(L, l));
  return s;
}

inline sasaki::Vector vec(std::initializer_list<long> xs) {
  sasaki::Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline sasaki::Subspace line(std::initializer_list<long> xs) {
  return sasaki::Subspace::span(xs.size(), {vec(xs)});
}

template <typename Fn>
sasaki::ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const sasaki::Error& e) {
    return e.code();
  }
  FAIL("expected sasaki::Error");
  return sasaki::ErrorCode::Malformed;
}

}  // namespace testing
