#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tba/io.hpp"

// Shared fixtures: the corpus is {Z2, Klein-four, S3, Z4 group algebras;
// the pentagon distance scheme; the one-parameter family for q = 2..5}.
namespace corpus {

inline std::string fixture(const std::string& name) {
  return std::string(TBA_FIXTURE_DIR) + "/" + name;
}

inline tba::TableAlgebra::Ptr load(const std::string& name) {
  return tba::load_algebra(fixture(name));
}

struct Entry {
  std::string name;
  tba::TableAlgebra::Ptr algebra;
};

inline std::vector<Entry> all() {
  std::vector<Entry> out;
  for (const char* name :
       {"z2.group", "klein4.group", "s3.group", "z4.group",
        "pentagon.scheme"}) {
    out.push_back({name, load(name)});
  }
  for (int q = 2; q <= 5; ++q) {
    out.push_back({"example q=" + std::to_string(q), tba::example_q(q)});
  }
  return out;
}

}  // namespace corpus
