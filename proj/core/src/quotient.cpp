#include "mvw/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace mvw {

namespace {

std::vector<Elem> representatives_of(Congruence const& c) {
  std::vector<Elem> reps(c.classes, 0);
  std::vector<bool> seen(c.classes, false);
  for (Elem x = 0; x < c.class_of.size(); ++x) {
    if (!seen[c.class_of[x]]) {
      seen[c.class_of[x]] = true;
      reps[c.class_of[x]] = x;
    }
  }
  return reps;
}

struct Tables {
  std::vector<std::string> names;
  std::vector<Elem> neg, add;
};

Tables induced_tables(MvAlgebra const& mv, Congruence const& c, std::vector<Elem> const& reps) {
  Tables t;
  auto const k = c.classes;
  t.neg.resize(k);
  t.add.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    t.names.push_back("[" + mv.name_of(reps[i]) + "]");
    t.neg[i] = c.class_of[mv.neg(reps[i])];
    for (std::size_t j = 0; j < k; ++j) t.add[i * k + j] = c.class_of[mv.add(reps[i], reps[j])];
  }
  return t;
}

std::string quotient_name(MvAlgebra const& mv, ElemSet const& ideal) {
  return fmt::format("{}/{}", mv.name(), format_set(mv, ideal));
}

}  // namespace

MvQuotient mv_quotient(MvAlgebra const& mv, ElemSet const& ideal) {
  if (auto c = is_mv_ideal(mv, ideal); !c) throw Error(ErrorKind::InvalidArgument, "not an MV-ideal", c.witness);
  auto cong = congruence_from_ideal(mv, ideal);
  if (auto c = check_congruence(mv, cong); !c) throw Error(ErrorKind::NotACongruence, "ideal does not induce a congruence", c.witness);
  auto reps = representatives_of(cong);
  auto t = induced_tables(mv, cong, reps);
  auto q = MvAlgebra::derive(quotient_name(mv, ideal), std::move(t.names), std::move(t.neg), std::move(t.add));
  return {ideal, std::move(cong), std::move(reps), std::move(q)};
}

QuotientRig quotient(MvwRig const& rig, ElemSet const& ideal) {
  if (auto c = is_ideal(rig, ideal); !c) throw Error(ErrorKind::InvalidArgument, "not an ideal", c.witness);
  auto cong = congruence_from_ideal(rig, ideal);
  if (auto c = check_congruence(rig, cong); !c) throw Error(ErrorKind::NotACongruence, "ideal does not induce a congruence", c.witness);
  auto reps = representatives_of(cong);
  auto t = induced_tables(rig, cong, reps);
  auto const k = cong.classes;
  std::vector<Elem> mul(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) mul[i * k + j] = cong.class_of[rig.mul(reps[i], reps[j])];
  auto q = MvwRig::derive(quotient_name(rig, ideal), std::move(t.names), std::move(t.neg), std::move(t.add), std::move(mul));
  return {ideal, std::move(cong), std::move(reps), std::move(q)};
}

FirstIsomorphism first_iso(Homomorphism const& f) {
  if (auto c = check_homomorphism(f); !c) throw Error(ErrorKind::NotAHomomorphism, "map is not a homomorphism", c.witness);
  auto const& src = f.source();
  FirstIsomorphism out{quotient(src, kernel(f).members), image(f), {}};
  auto const& q = out.quotient;
  auto const& img = out.image;

  std::vector<Elem> position(f.target().size(), static_cast<Elem>(-1));
  for (Elem i = 0; i < img.inclusion.size(); ++i) position[img.inclusion[i]] = i;

  out.iso.resize(q.rig.size());
  for (Elem c = 0; c < q.rig.size(); ++c) out.iso[c] = position[f(q.representatives[c])];
  for (Elem x = 0; x < src.size(); ++x)
    if (img.inclusion[out.iso[q.project(x)]] != f(x))
      throw std::logic_error(fmt::format("induced map is not well defined at {}", src.name_of(x)));

  auto sorted = out.iso;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != img.rig.size() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::logic_error("induced map is not a bijection");
  if (auto c = check_homomorphism(Homomorphism(q.rig, img.rig, out.iso)); !c)
    throw std::logic_error("induced map is not a homomorphism: " + c.witness);
  return out;
}

Correspondence ideal_correspondence(MvwRig const& rig, ElemSet const& ideal) {
  Correspondence out{quotient(rig, ideal), {}, {}, {}};
  auto const& q = out.quotient;
  for (auto const& j : enumerate_ideals(rig))
    if (ideal.is_subset_of(j.members)) out.above.push_back(j.members);
  for (auto const& j : enumerate_ideals(q.rig)) out.quotient_ideals.push_back(j.members);

  auto image_of = [&](ElemSet const& j) {
    ElemSet s(q.rig.size());
    j.for_each([&](Elem x) { s.insert(q.project(x)); });
    return s;
  };
  auto preimage_of = [&](ElemSet const& k) {
    ElemSet s(rig.size());
    for (Elem x = 0; x < rig.size(); ++x)
      if (k.contains(q.project(x))) s.insert(x);
    return s;
  };

  std::vector<bool> hit(out.quotient_ideals.size(), false);
  for (auto const& j : out.above) {
    auto img = image_of(j);
    auto it = std::find(out.quotient_ideals.begin(), out.quotient_ideals.end(), img);
    if (it == out.quotient_ideals.end())
      throw std::logic_error("image of " + format_set(rig, j) + " is not an ideal of the quotient");
    auto k = static_cast<std::size_t>(it - out.quotient_ideals.begin());
    if (hit[k]) throw std::logic_error("correspondence is not injective at " + format_set(rig, j));
    if (preimage_of(img) != j) throw std::logic_error("preimage of image differs from " + format_set(rig, j));
    hit[k] = true;
    out.forward.push_back(k);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw std::logic_error("correspondence is not surjective");
  for (std::size_t a = 0; a < out.above.size(); ++a)
    for (std::size_t b = 0; b < out.above.size(); ++b) {
      bool lhs = out.above[a].is_subset_of(out.above[b]);
      bool rhs = out.quotient_ideals[out.forward[a]].is_subset_of(out.quotient_ideals[out.forward[b]]);
      if (lhs != rhs) throw std::logic_error("correspondence does not preserve inclusion");
    }
  return out;
}

}  // namespace mvw
