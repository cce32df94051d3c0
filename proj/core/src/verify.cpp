#include "mvw/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>

#include <fmt/format.h>

#include "mvw/error.hpp"
#include "mvw/laws.hpp"
#include "mvw/locale.hpp"
#include "mvw/spectrum.hpp"

namespace mvw {

namespace {

enum Gate : unsigned {
  kNone = 0,
  kRig = 1u << 0,
  kCommutative = 1u << 1,
  kUnit = 1u << 2,
  kBelowMeet = 1u << 3,
  kLawBound = 1u << 4,
  kCorrespondenceBound = 1u << 5,
  kFrameBound = 1u << 6,
};

struct Context {
  MvAlgebra const& mv;
  MvwRig const* rig;
  VerifyOptions const& opt;

  std::optional<SpecSpace> spec_;
  std::optional<FrameLA> frame_;
  std::unique_ptr<laws::HomFamily> homs_;

  MvwRig const& r() const { return *rig; }
  SpecSpace const& s() {
    if (!spec_) spec_ = spec(*rig);
    return *spec_;
  }
  FrameLA const& l() {
    if (!frame_) frame_ = frame(*rig);
    return *frame_;
  }
  laws::HomFamily const& homs() {
    if (!homs_) homs_ = std::make_unique<laws::HomFamily>(*rig, opt.endomorphism_bound);
    return *homs_;
  }
};

Check from_report(AxiomReport const& rep) {
  if (rep.ok()) return {};
  auto const& w = rep.witnesses().front();
  return Check::failure(fmt::format("{} at {}: {}", w.axiom, w.tuple, w.detail));
}

template <typename F>
Check over_maps(Context& c, F&& f) {
  auto const& fam = c.homs();
  for (std::size_t i = 0; i < fam.maps().size(); ++i)
    if (auto k = f(fam.maps()[i]); !k) return Check::failure(fam.labels()[i] + ": " + k.witness);
  return {};
}

struct Entry {
  PropertyInfo info;
  unsigned gates;
  std::function<Check(Context&)> run;
};

std::string describe_gates(unsigned g) {
  std::vector<std::string> parts;
  if (g & kRig) parts.emplace_back("product");
  if (g & kCommutative) parts.emplace_back("commutative");
  if (g & kUnit) parts.emplace_back("unit");
  if (g & kBelowMeet) parts.emplace_back("ab <= a ^ b");
  if (g & kLawBound) parts.emplace_back("|A| <= law bound");
  if (g & kCorrespondenceBound) parts.emplace_back("|A| <= correspondence bound");
  if (g & kFrameBound) parts.emplace_back("|A| <= frame bound");
  return fmt::format("{}", fmt::join(parts, ", "));
}

Entry make(std::string id, std::string suite, std::string statement, unsigned gates, std::function<Check(Context&)> run) {
  auto gate = describe_gates(gates);
  return {{std::move(id), std::move(suite), std::move(statement), std::move(gate)}, gates, std::move(run)};
}

std::vector<Entry> const& registry() {
  static std::vector<Entry> const entries = [] {
    std::vector<Entry> e;
    // core
    e.push_back(make("core.mv-axioms", "core", "MV1-MV6 hold for all tuples", kNone,
                     [](Context& c) { return from_report(check_mv(c.mv)); }));
    e.push_back(make("core.mvw-axioms", "core", "MVW axioms ii-v hold for all triples", kRig,
                     [](Context& c) { return from_report(check_mvw(c.r())); }));
    e.push_back(make("core.order-lattice", "core", "the derived order is a bounded lattice with v, ^ as join and meet",
                     kLawBound, [](Context& c) { return laws::order_is_lattice(c.mv); }));
    e.push_back(make("core.residuation", "core", "x <= y + z iff x - z <= y", kLawBound,
                     [](Context& c) { return laws::residuation(c.mv); }));
    e.push_back(make("core.monus-subadditive", "core", "(x1 + x2) - (y1 + y2) <= (x1 - y1) + (x2 - y2)", kLawBound,
                     [](Context& c) { return laws::monus_subadditive(c.mv, 2); }));
    e.push_back(make("core.monus-subadditive-4", "core",
                     "(+ x_i) - (+ y_i) <= + (x_i - y_i) for 3 and 4 summands", kLawBound, [](Context& c) {
                       if (auto k = laws::monus_subadditive(c.mv, 3); !k) return k;
                       return laws::monus_subadditive(c.mv, 4);
                     }));
    e.push_back(make("core.product-monotone", "core", "a <= b implies ac <= bc and ca <= cb", kRig | kLawBound,
                     [](Context& c) { return laws::product_monotone(c.r()); }));
    e.push_back(make("core.product-join", "core", "a(b v c) >= ab v ac and (b v c)a >= ba v ca", kRig | kLawBound,
                     [](Context& c) { return laws::product_join(c.r()); }));
    e.push_back(make("core.product-meet", "core", "a(b ^ c) <= ab ^ ac and (b ^ c)a <= ba ^ ca", kRig | kLawBound,
                     [](Context& c) { return laws::product_meet(c.r()); }));
    e.push_back(make("core.power-join", "core", "(a v b)^n >= a^n v b^n for n <= 3", kRig | kLawBound,
                     [](Context& c) { return laws::power_join(c.r(), 3); }));
    e.push_back(make("core.power-meet", "core", "(a ^ b)^n <= a^n ^ b^n for n <= 3", kRig | kLawBound,
                     [](Context& c) { return laws::power_meet(c.r(), 3); }));
    e.push_back(make("core.unit-unique", "core", "at most one unit exists", kRig,
                     [](Context& c) { return laws::unit_unique(c.r()); }));
    e.push_back(make("core.derive-idempotent", "core", "re-deriving a derived rig changes nothing", kRig,
                     [](Context& c) { return laws::derive_idempotent(c.r()); }));
    // ideals
    e.push_back(make("ideals.congruence-bijection", "ideals",
                     "ideal -> congruence -> ideal and congruence -> ideal -> congruence are identities", kRig | kLawBound,
                     [](Context& c) { return laws::congruence_bijection(c.r()); }));
    e.push_back(make("ideals.quotient", "ideals",
                     "A/I is an MVW-rig and the projection is a homomorphism with kernel I", kRig | kLawBound,
                     [](Context& c) { return laws::quotient_laws(c.r()); }));
    e.push_back(make("ideals.correspondence", "ideals",
                     "ideals of A/I correspond to ideals of A containing I", kRig | kCorrespondenceBound,
                     [](Context& c) { return laws::correspondence(c.r()); }));
    e.push_back(make("ideals.maximal-exist", "ideals", "every proper ideal lies in a maximal ideal", kRig,
                     [](Context& c) { return laws::maximal_exist(c.r()); }));
    e.push_back(make("ideals.maximal-prime", "ideals", "every maximal ideal is prime", kRig | kCommutative | kUnit,
                     [](Context& c) { return laws::maximal_are_prime(c.r()); }));
    e.push_back(make("ideals.nilradical", "ideals",
                     "N is an ideal, A/N has no nonzero nilpotents, N lies in every prime", kRig | kCommutative,
                     [](Context& c) { return laws::nilradical_laws(c.r()); }));
    e.push_back(make("ideals.nilradical-primes", "ideals", "N is the intersection of the proper primes",
                     kRig | kCommutative, [](Context& c) { return laws::nilradical_is_prime_intersection(c.r()); }));
    e.push_back(make("ideals.radical", "ideals",
                     "rad I is the intersection of primes over I, contains I, is monotone, fixes primes, "
                     "rad(I n J) = rad(IJ)",
                     kRig | kCommutative | kLawBound, [](Context& c) { return laws::radical_laws(c.r()); }));
    e.push_back(make("ideals.prime-mv-prime", "ideals", "if ab <= a ^ b then every prime is MV-prime",
                     kRig | kBelowMeet, [](Context& c) { return laws::prime_is_mv_prime(c.r()); }));
    e.push_back(make("ideals.homomorphisms", "ideals",
                     "kernels are ideals, f(x) <= f(y) iff x - y in ker f, preimages of primes are prime",
                     kRig | kLawBound, [](Context& c) { return over_maps(c, laws::homomorphism_laws); }));
    e.push_back(make("ideals.first-isomorphism", "ideals", "A/ker f is isomorphic to f(A)", kRig | kLawBound,
                     [](Context& c) { return over_maps(c, laws::first_isomorphism); }));
    e.push_back(make("ideals.chang", "ideals",
                     "A embeds into the product of A/P over MV-primes P, each factor a chain", kLawBound,
                     [](Context& c) { return laws::chang(c.mv); }));
    // spectrum
    e.push_back(make("spectrum.topology", "spectrum", "the opens contain the basic opens and form a topology",
                     kRig | kCommutative, [](Context& c) { return check_topology(c.s()); }));
    e.push_back(make("spectrum.t0", "spectrum", "Spec is T0", kRig | kCommutative,
                     [](Context& c) { return is_t0(c.s()); }));
    e.push_back(make("spectrum.base", "spectrum",
                     "V(a + b) = V(a) n V(b) = V(a v b), V(ab) = V(a) u V(b), V(ab) in V(a ^ b), V(0) = Spec, V(u) empty",
                     kRig | kCommutative | kUnit, [](Context& c) { return laws::base_laws(c.r(), c.s()); }));
    e.push_back(make("spectrum.nilpotent", "spectrum", "V(a) = Spec iff a is nilpotent", kRig | kCommutative | kUnit,
                     [](Context& c) { return laws::nilpotent_law(c.r(), c.s()); }));
    e.push_back(make("spectrum.specialization", "spectrum", "Q in cl{P} iff Q is inside P", kRig | kCommutative,
                     [](Context& c) { return laws::specialization(c.s()); }));
    e.push_back(make("spectrum.set-closure", "spectrum",
                     "points below U lie in cl(U), and conversely when U has one maximal point", kRig | kCommutative,
                     [](Context& c) { return laws::set_closure_laws(c.s()); }));
    e.push_back(make("spectrum.irreducible", "spectrum", "Spec is irreducible iff A has a unique maximal ideal",
                     kRig | kCommutative | kUnit, [](Context& c) { return laws::irreducible_iff_local(c.r(), c.s()); }));
    e.push_back(make("spectrum.radical-order", "spectrum", "V(a) in V(b) iff rad<b> in rad<a>", kRig | kCommutative,
                     [](Context& c) { return laws::radical_order(c.r(), c.s()); }));
    e.push_back(make("spectrum.maps", "spectrum",
                     "Spec of a homomorphism is continuous with the stated images and preimages", kRig | kCommutative | kLawBound,
                     [](Context& c) { return over_maps(c, laws::spec_map_laws); }));
    e.push_back(make("spectrum.compactness", "spectrum", "every cover by basic opens has a finite subcover",
                     kRig | kCommutative | kUnit | kFrameBound,
                     [](Context& c) { return laws::spec_compactness(c.r(), c.s()); }));
    // locale
    e.push_back(make("locale.generation", "locale", "the P-filter formula agrees with fixpoint closure",
                     kRig | kCommutative | kUnit | kFrameBound, [](Context& c) { return laws::pfilter_generation(c.r()); }));
    e.push_back(make("locale.decomposition", "locale", "every P-filter is the union of its principal P-filters",
                     kRig | kCommutative | kUnit | kFrameBound,
                     [](Context& c) { return laws::pfilter_decomposition(c.r(), c.l()); }));
    e.push_back(make("locale.principal", "locale",
                     "F_a n F_b = F_{a v b}, F_a v F_b = F_{ab}, and the join matches the mixed-power description",
                     kRig | kCommutative | kUnit | kFrameBound,
                     [](Context& c) { return laws::principal_identities(c.r(), c.l()); }));
    e.push_back(make("locale.frame", "locale",
                     "L_A has bottom F_u and top A and is a frame against all families of principal P-filters",
                     kRig | kCommutative | kUnit | kFrameBound, [](Context& c) { return laws::frame_laws(c.r(), c.l()); }));
    e.push_back(make("locale.theta", "locale", "theta is an order isomorphism from the opens of Spec onto L_A",
                     kRig | kCommutative | kUnit | kFrameBound,
                     [](Context& c) { return laws::theta_iso(c.r(), c.s(), c.l()); }));
    e.push_back(make("locale.subcover", "locale",
                     "finite_subcover returns a subfamily joining to A and refuses non-covers",
                     kRig | kCommutative | kUnit | kFrameBound,
                     [](Context& c) { return laws::subcover_soundness(c.r(), c.l()); }));
    return e;
  }();
  return entries;
}

std::optional<std::string> skip_reason(unsigned g, Context const& c) {
  if ((g & kRig) && !c.rig) return "no product (MV-only input)";
  if ((g & kCommutative) && !c.rig->is_commutative()) return "rig is not commutative";
  if ((g & kUnit) && !c.rig->has_unit()) return "rig has no unit";
  if ((g & kBelowMeet) && !c.rig->flags().product_below_meet) return "ab <= a ^ b fails";
  auto n = c.mv.size();
  if ((g & kLawBound) && n > c.opt.law_bound) return fmt::format("|A| = {} exceeds {}", n, c.opt.law_bound);
  if ((g & kCorrespondenceBound) && n > c.opt.correspondence_bound)
    return fmt::format("|A| = {} exceeds {}", n, c.opt.correspondence_bound);
  if ((g & kFrameBound) && n > c.opt.frame_bound) return fmt::format("|A| = {} exceeds {}", n, c.opt.frame_bound);
  return std::nullopt;
}

}  // namespace

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names{"core", "ideals", "spectrum", "locale"};
  return names;
}

std::vector<PropertyInfo> const& property_catalog() {
  static std::vector<PropertyInfo> const infos = [] {
    std::vector<PropertyInfo> out;
    for (auto const& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<PropertyResult> verify(MvAlgebra const& mv, MvwRig const* rig, std::string const& suite,
                                   VerifyOptions const& opt) {
  auto const& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("unknown suite '{}' (expected all, {})", suite, fmt::join(names, ", ")));
  Context ctx{mv, rig, opt, {}, {}, {}};
  std::vector<PropertyResult> out;
  for (auto const& e : registry()) {
    if (suite != "all" && e.info.suite != suite) continue;
    PropertyResult res{e.info.id, e.info.suite, e.info.statement, Status::Pass, {}};
    if (auto why = skip_reason(e.gates, ctx)) {
      res.status = Status::Skipped;
      res.detail = *why;
    } else {
      try {
        auto k = e.run(ctx);
        if (!k) {
          res.status = Status::Fail;
          res.detail = k.witness;
        }
      } catch (Error const& err) {
        if (err.kind() == ErrorKind::SizeBound) {
          res.status = Status::Skipped;
          res.detail = err.what();
        } else {
          res.status = Status::Fail;
          res.detail = fmt::format("{}: {}", to_string(err.kind()), err.what());
        }
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

bool all_passed(std::vector<PropertyResult> const& results) {
  return std::none_of(results.begin(), results.end(), [](auto const& r) { return r.status == Status::Fail; });
}

}  // namespace mvw
