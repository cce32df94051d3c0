#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvw/algebra.hpp"

namespace mvw {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s) noexcept;

struct Witness {
  std::string axiom;
  std::string tuple;  // rendered with element names
  std::string detail;
};

/// Outcome of an exhaustive axiom check. ok() iff no witness was recorded.
/// Only the first counterexample per axiom is kept.
class AxiomReport {
 public:
  void pass(std::string const& axiom);
  void fail(std::string const& axiom, std::string tuple, std::string detail);
  void merge(AxiomReport const& other);

  bool ok() const noexcept { return witnesses_.empty(); }
  Status status(std::string const& axiom) const;
  std::vector<std::pair<std::string, Status>> const& entries() const noexcept { return order_; }
  std::vector<Witness> const& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::pair<std::string, Status>> order_;
  std::vector<Witness> witnesses_;
};

/// MV1-MV6 over all tuples, plus closure of the stored tables.
AxiomReport check_mv(MvAlgebra const& mv);

/// MVW axioms ii-v over all triples. Does not re-run check_mv.
AxiomReport check_mvw(MvwRig const& rig);

/// check_mv followed by check_mvw.
AxiomReport check_all(MvwRig const& rig);

}  // namespace mvw
