#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "orderdim/core.hpp"
#include "orderdim/error.hpp"

#define EXPECT_CODE(stmt, expected)                                             \
  do {                                                                          \
    try {                                                                       \
      stmt;                                                                     \
      ADD_FAILURE() << "no exception from " #stmt;                              \
    } catch (const orderdim::Error& e_) {                                       \
      EXPECT_EQ(e_.code(), orderdim::ErrorCode::expected) << e_.what();         \
    }                                                                           \
  } while (0)

namespace support {

inline orderdim::ElementSet ids(const orderdim::Poset& P, std::initializer_list<const char*> names) {
  orderdim::ElementSet out;
  for (auto n : names) out.push_back(P.index_of(n));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> names(const orderdim::Poset& P, const std::vector<std::size_t>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(P.label(x));
  return out;
}

inline orderdim::Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<orderdim::NamePair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i) pairs.emplace_back(labels[i - 1], labels[i]);
  }
  return orderdim::build_poset(labels, pairs);
}

inline orderdim::Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
  return orderdim::build_poset(labels, {});
}

}  // namespace support
