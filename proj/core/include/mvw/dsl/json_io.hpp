#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mvw/dsl/elaborate.hpp"
#include "mvw/ideals.hpp"
#include "mvw/locale.hpp"
#include "mvw/quotient.hpp"
#include "mvw/spectrum.hpp"

// Canonical JSON: fixed key order, sorted index arrays, compact output with a
// trailing newline. Deserializers throw SchemaError with a JSON pointer.
namespace mvw::dsl {

std::string rig_to_json(MvwRig const& rig);
/// Product-free form: "mul" is null and flags only carry "top".
std::string rig_to_json(MvAlgebra const& mv);
std::string structure_to_json(Structure const& s);

/// Rebuilds the structure and checks that the stored flags match.
Structure structure_from_json(std::string_view text);

std::string ideals_to_json(MvwRig const& rig, std::vector<Ideal> const& ideals);
std::vector<ElemSet> ideals_from_json(std::string_view text, std::size_t universe);

std::string quotient_to_json(QuotientRig const& q);

std::string spec_to_json(SpecSpace const& s);
SpecSpace spec_from_json(std::string_view text, std::size_t universe);

std::string pfilters_to_json(std::vector<ElemSet> const& filters);
std::string frame_to_json(FrameLA const& l);
/// Restores filters, principal indices and the Hasse list; the join and meet
/// tables are recomputed from inclusion.
FrameLA frame_from_json(std::string_view text, std::size_t universe);

}  // namespace mvw::dsl
