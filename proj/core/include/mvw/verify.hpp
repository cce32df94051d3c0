#pragma once

#include <string>
#include <vector>

#include "mvw/algebra.hpp"
#include "mvw/axioms.hpp"

namespace mvw {

struct PropertyInfo {
  std::string id;
  std::string suite;
  std::string statement;
  std::string gate;  // empty if the property always runs
};

struct PropertyResult {
  std::string id;
  std::string suite;
  std::string statement;
  Status status = Status::Pass;
  std::string detail;  // witness on failure, reason on skip
};

struct VerifyOptions {
  std::size_t law_bound = 16;         // carriers above this skip the exhaustive law groups
  std::size_t correspondence_bound = 16;
  std::size_t endomorphism_bound = 4;
  std::size_t frame_bound = 16;
};

/// core, ideals, spectrum, locale.
std::vector<std::string> const& suite_names();

/// Every property, in run order.
std::vector<PropertyInfo> const& property_catalog();

/// Runs one suite ("all" runs every suite). rig may be null for MV-only input.
/// Throws InvalidArgument on an unknown suite name.
std::vector<PropertyResult> verify(MvAlgebra const& mv, MvwRig const* rig, std::string const& suite,
                                   VerifyOptions const& opt = {});

/// True when no result has status Fail.
bool all_passed(std::vector<PropertyResult> const& results);

}  // namespace mvw
