#include "mvw/dsl/json_io.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "json.hpp"

namespace mvw::dsl {

using json = nlohmann::ordered_json;

namespace {

std::string dump(json const& j) { return j.dump() + "\n"; }

json index_array(ElemSet const& s) {
  json a = json::array();
  s.for_each([&](Elem x) { a.push_back(x); });
  return a;
}

json table(std::vector<Elem> const& t, std::size_t n) {
  json rows = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < n; ++y) row.push_back(t[x * n + y]);
    rows.push_back(std::move(row));
  }
  return rows;
}

json mv_part(MvAlgebra const& mv) {
  json j;
  j["name"] = mv.name();
  j["elements"] = mv.names();
  j["zero"] = 0;
  j["neg"] = mv.neg_table();
  j["add"] = table(mv.add_table(), mv.size());
  return j;
}

[[noreturn]] void schema(std::string const& path, std::string const& message) {
  throw Error(ErrorKind::SchemaError, fmt::format("{}: {}", path.empty() ? "/" : path, message), path.empty() ? "/" : path);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    schema("", std::string("malformed JSON: ") + e.what());
  }
}

json const& field(json const& j, std::string const& path, char const* key) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path + "/" + key, "missing field");
  return *it;
}

Elem index_value(json const& j, std::string const& path, std::size_t universe) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) schema(path, "expected a nonnegative integer");
  auto v = j.get<unsigned long long>();
  if (v >= universe) schema(path, fmt::format("index {} out of range (size {})", v, universe));
  return static_cast<Elem>(v);
}

ElemSet index_set(json const& j, std::string const& path, std::size_t universe) {
  if (!j.is_array()) schema(path, "expected an array");
  ElemSet s(universe);
  Elem prev = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto p = fmt::format("{}/{}", path, i);
    Elem x = index_value(j[i], p, universe);
    if (i > 0 && x <= prev) schema(p, "indices must be strictly increasing");
    s.insert(x);
    prev = x;
  }
  return s;
}

std::vector<Elem> flat(json const& j, std::string const& path, std::size_t n) {
  if (!j.is_array() || j.size() != n) schema(path, fmt::format("expected an array of {} entries", n));
  std::vector<Elem> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(index_value(j[i], fmt::format("{}/{}", path, i), n));
  return out;
}

std::vector<Elem> square(json const& j, std::string const& path, std::size_t n) {
  if (!j.is_array() || j.size() != n) schema(path, fmt::format("expected {} rows", n));
  std::vector<Elem> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto row = flat(j[i], fmt::format("{}/{}", path, i), n);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

bool boolean(json const& j, std::string const& path) {
  if (!j.is_boolean()) schema(path, "expected a boolean");
  return j.get<bool>();
}

}  // namespace

std::string rig_to_json(MvwRig const& rig) {
  json j = mv_part(rig);
  j["mul"] = table(rig.mul_table(), rig.size());
  auto const& f = rig.flags();
  json flags;
  flags["commutative"] = f.commutative;
  flags["unit"] = f.unit ? json(*f.unit) : json(nullptr);
  flags["product_below_meet"] = f.product_below_meet;
  flags["top"] = f.top;
  j["flags"] = std::move(flags);
  return dump(j);
}

std::string rig_to_json(MvAlgebra const& mv) {
  json j = mv_part(mv);
  j["mul"] = nullptr;
  j["flags"] = json{{"top", mv.top()}};
  return dump(j);
}

std::string structure_to_json(Structure const& s) { return s.rig ? rig_to_json(*s.rig) : rig_to_json(s.mv); }

Structure structure_from_json(std::string_view text) {
  json j = parse_json(text);
  auto const& name = field(j, "", "name");
  if (!name.is_string()) schema("/name", "expected a string");
  auto const& elements = field(j, "", "elements");
  if (!elements.is_array() || elements.empty()) schema("/elements", "expected a nonempty array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].is_string()) schema(fmt::format("/elements/{}", i), "expected a string");
    names.push_back(elements[i].get<std::string>());
  }
  auto const n = names.size();
  if (index_value(field(j, "", "zero"), "/zero", n) != 0) schema("/zero", "zero must be element 0");
  auto neg = flat(field(j, "", "neg"), "/neg", n);
  auto add = square(field(j, "", "add"), "/add", n);
  auto const& mul = field(j, "", "mul");
  auto const& flags = field(j, "", "flags");

  Structure s;
  try {
    s.mv = MvAlgebra::derive(name.get<std::string>(), std::move(names), std::move(neg), std::move(add));
  } catch (Error const& e) {
    schema("/add", e.what());
  }
  s.values.assign(n, std::nullopt);
  if (index_value(field(flags, "/flags", "top"), "/flags/top", n) != s.mv.top()) schema("/flags/top", "does not match neg(0)");
  if (!mul.is_null()) {
    s.rig = MvwRig::derive(s.mv, square(mul, "/mul", n));
    auto const& f = s.rig->flags();
    if (boolean(field(flags, "/flags", "commutative"), "/flags/commutative") != f.commutative)
      schema("/flags/commutative", "does not match the tables");
    auto const& unit = field(flags, "/flags", "unit");
    std::optional<Elem> u;
    if (!unit.is_null()) u = index_value(unit, "/flags/unit", n);
    if (u != f.unit) schema("/flags/unit", "does not match the tables");
    if (boolean(field(flags, "/flags", "product_below_meet"), "/flags/product_below_meet") != f.product_below_meet)
      schema("/flags/product_below_meet", "does not match the tables");
  }
  s.report = check_mv(s.mv);
  if (s.rig) s.report.merge(check_mvw(*s.rig));
  return s;
}

std::string ideals_to_json(MvwRig const& rig, std::vector<Ideal> const& ideals) {
  json list = json::array();
  for (auto const& i : ideals) {
    auto c = classify_ideal(rig, i.members);
    json e;
    e["elements"] = index_array(i.members);
    e["proper"] = c.proper;
    e["prime"] = c.prime;
    e["mv_prime"] = c.mv_prime;
    e["maximal"] = c.maximal;
    list.push_back(std::move(e));
  }
  json j;
  j["rig"] = rig.name();
  j["ideals"] = std::move(list);
  return dump(j);
}

std::vector<ElemSet> ideals_from_json(std::string_view text, std::size_t universe) {
  json j = parse_json(text);
  auto const& list = field(j, "", "ideals");
  if (!list.is_array()) schema("/ideals", "expected an array");
  std::vector<ElemSet> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto p = fmt::format("/ideals/{}", i);
    out.push_back(index_set(field(list[i], p, "elements"), p + "/elements", universe));
  }
  return out;
}

std::string quotient_to_json(QuotientRig const& q) {
  json j;
  j["ideal"] = index_array(q.ideal);
  j["projection"] = q.projection();
  j["representatives"] = q.representatives;
  j["quotient"] = json::parse(rig_to_json(q.rig));
  return dump(j);
}

std::string spec_to_json(SpecSpace const& s) {
  json j;
  j["points"] = json::array();
  for (auto const& p : s.points) j["points"].push_back(index_array(p));
  j["base"] = json::object();
  for (std::size_t a = 0; a < s.base.size(); ++a) j["base"][std::to_string(a)] = index_array(s.base[a]);
  j["opens"] = json::array();
  for (auto const& u : s.opens) j["opens"].push_back(index_array(u));
  return dump(j);
}

SpecSpace spec_from_json(std::string_view text, std::size_t universe) {
  json j = parse_json(text);
  SpecSpace s;
  auto const& points = field(j, "", "points");
  if (!points.is_array()) schema("/points", "expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) s.points.push_back(index_set(points[i], fmt::format("/points/{}", i), universe));
  auto const np = s.points.size();
  auto const& base = field(j, "", "base");
  if (!base.is_object() || base.size() != universe) schema("/base", fmt::format("expected an object with {} entries", universe));
  for (std::size_t a = 0; a < universe; ++a) {
    auto key = std::to_string(a);
    s.base.push_back(index_set(field(base, "/base", key.c_str()), "/base/" + key, np));
  }
  auto const& opens = field(j, "", "opens");
  if (!opens.is_array()) schema("/opens", "expected an array");
  for (std::size_t i = 0; i < opens.size(); ++i) s.opens.push_back(index_set(opens[i], fmt::format("/opens/{}", i), np));
  if (!std::is_sorted(s.opens.begin(), s.opens.end())) schema("/opens", "opens must be listed smallest first");
  return s;
}

std::string pfilters_to_json(std::vector<ElemSet> const& filters) {
  json j;
  j["filters"] = json::array();
  for (auto const& f : filters) j["filters"].push_back(index_array(f));
  return dump(j);
}

std::string frame_to_json(FrameLA const& l) {
  json j;
  j["filters"] = json::array();
  for (auto const& f : l.filters) j["filters"].push_back(index_array(f));
  j["principal"] = l.principal;
  j["hasse"] = json::array();
  for (auto [a, b] : l.hasse) j["hasse"].push_back(json::array({a, b}));
  return dump(j);
}

FrameLA frame_from_json(std::string_view text, std::size_t universe) {
  json j = parse_json(text);
  FrameLA l;
  auto const& filters = field(j, "", "filters");
  if (!filters.is_array() || filters.empty()) schema("/filters", "expected a nonempty array");
  for (std::size_t i = 0; i < filters.size(); ++i)
    l.filters.push_back(index_set(filters[i], fmt::format("/filters/{}", i), universe));
  auto const k = l.filters.size();
  auto const& principal = field(j, "", "principal");
  if (!principal.is_array() || principal.size() != universe) schema("/principal", fmt::format("expected {} entries", universe));
  for (std::size_t a = 0; a < universe; ++a) l.principal.push_back(index_value(principal[a], fmt::format("/principal/{}", a), k));
  auto const& hasse = field(j, "", "hasse");
  if (!hasse.is_array()) schema("/hasse", "expected an array");
  for (std::size_t i = 0; i < hasse.size(); ++i) {
    auto p = fmt::format("/hasse/{}", i);
    if (!hasse[i].is_array() || hasse[i].size() != 2) schema(p, "expected a pair");
    l.hasse.emplace_back(index_value(hasse[i][0], p + "/0", k), index_value(hasse[i][1], p + "/1", k));
  }
  std::map<ElemSet, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(l.filters[i], i);
  l.meet.resize(k * k);
  l.join.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto m = index.find(l.filters[a] & l.filters[b]);
      if (m == index.end()) schema("/filters", "not closed under intersection");
      l.meet[a * k + b] = m->second;
      auto upper = ElemSet::full(universe);
      for (auto const& f : l.filters)
        if (l.filters[a].is_subset_of(f) && l.filters[b].is_subset_of(f)) upper &= f;
      auto u = index.find(upper);
      if (u == index.end()) schema("/filters", "joins are not listed");
      l.join[a * k + b] = u->second;
    }
  return l;
}

}  // namespace mvw::dsl
