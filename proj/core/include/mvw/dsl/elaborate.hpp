#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "mvw/axioms.hpp"
#include "mvw/builders.hpp"
#include "mvw/dsl/ast.hpp"

namespace mvw::dsl {

/// An elaborated algebra. `rig` is empty when no product was given (or the
/// product was ignored), in which case only the MV axioms were checked.
struct Structure {
  MvAlgebra mv;
  std::optional<MvwRig> rig;
  std::vector<std::optional<Rational>> values;  // numeric value of each element, when it has one
  AxiomReport report;

  std::string const& name() const noexcept { return mv.name(); }
  bool mv_only() const noexcept { return !rig.has_value(); }
};

struct ElaborateOptions {
  bool mv_only = false;               // ignore any product definition
  bool throw_on_axiom_failure = true;  // otherwise the failing report is returned
  std::size_t bound = default_size_bound();
};

/// Evaluates formulas exactly, resolves tables, moves the zero to index 0 and
/// runs the axiom checks. `earlier` holds the algebras a builder may refer to.
/// Throws Validation, ClosureViolation, OrderNotAntisymmetric or
/// AxiomViolation.
Structure elaborate(AlgebraSource const& source, std::vector<Structure> const& earlier,
                    ElaborateOptions const& options = {});
std::vector<Structure> elaborate(SourceFile const& file, ElaborateOptions const& options = {});

/// Parse and elaborate. Syntax errors throw SyntaxError.
std::vector<Structure> load(std::string_view text, ElaborateOptions const& options = {});
/// Reads the file (IoError on failure) and loads it.
std::vector<Structure> load_file(std::filesystem::path const& path, ElaborateOptions const& options = {});

/// Parses "1/2" or "3" into a reduced rational; nullopt for anything else.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace mvw::dsl
