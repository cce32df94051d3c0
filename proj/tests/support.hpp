#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "mvw/elem_set.hpp"
#include "oracle.hpp"

namespace support {

inline mvw::ElemSet to_set(oracle::Subset const& s) {
  mvw::ElemSet out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.insert(static_cast<mvw::Elem>(i));
  return out;
}

inline oracle::Subset to_subset(mvw::ElemSet const& s) {
  oracle::Subset out(s.universe());
  s.for_each([&](mvw::Elem e) { out[e] = true; });
  return out;
}

inline std::string sample(std::string const& name) { return std::string(MVW_SAMPLES_DIR) + "/" + name; }
inline std::string golden(std::string const& name) { return std::string(MVW_GOLDEN_DIR) + "/" + name; }

inline std::string slurp(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace support
