#include <sstream>

#include "sumprod/error.hpp"
#include "sumprod/harness.hpp"

namespace sumprod::harness {

using json = nlohmann::ordered_json;

json to_json(const BoundInstance& inst) {
  json sets = json::object();
  for (const auto& [name, s] : inst.sets) sets[name] = s.elements();
  json scalars = json::object();
  for (const auto& [name, v] : inst.scalars) scalars[name] = v;
  return json{{"sets", std::move(sets)}, {"scalars", std::move(scalars)}};
}

BoundInstance instance_from_json(PrimeModulus p, const json& j) {
  BoundInstance inst(p);
  for (const auto& [name, arr] : j.at("sets").items()) {
    auto elems = arr.get<std::vector<std::int64_t>>();
    inst.with(name, ZpSet(p, elems));
  }
  for (const auto& [name, v] : j.at("scalars").items()) inst.with(name, v.get<std::int64_t>());
  return inst;
}

json to_json(const LemmaReport& r, bool include_timing) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json inst = to_json(f.instance);
    failures.push_back(json{{"index", f.index}, {"sets", std::move(inst["sets"])},
                            {"scalars", std::move(inst["scalars"])}});
  }
  json j;
  j["lemma"] = std::string(to_string(r.lemma));
  j["p"] = r.p;
  j["mode"] = std::string(to_string(r.mode));
  j["seed"] = std::to_string(r.seed);
  j["tested"] = r.tested;
  j["vacuous"] = r.vacuous;
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = include_timing ? r.elapsed_ms : 0;
  return j;
}

std::string report_schema_violation(const json& j) {
  if (!j.is_object()) return "report is not an object";
  auto need = [&](const char* key, auto pred, const char* what) -> std::string {
    if (!j.contains(key)) return std::string("missing key '") + key + "'";
    if (!pred(j.at(key))) return std::string("'") + key + "' is not " + what;
    return {};
  };
  auto is_uint = [](const json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0); };
  for (auto err : {
           need("lemma", [](const json& v) { return v.is_string() && parse_lemma_id(v.get<std::string>()); }, "a lemma id"),
           need("p", is_uint, "a nonnegative integer"),
           need("mode", [](const json& v) { return v.is_string() && (v == "exhaustive" || v == "random"); }, "a mode"),
           need("seed", [](const json& v) {
             if (!v.is_string() || v.get<std::string>().empty()) return false;
             for (char c : v.get<std::string>()) if (c < '0' || c > '9') return false;
             return true;
           }, "a decimal string"),
           need("tested", is_uint, "a nonnegative integer"),
           need("vacuous", is_uint, "a nonnegative integer"),
           need("failures", [](const json& v) { return v.is_array(); }, "an array"),
           need("elapsed_ms", is_uint, "a nonnegative integer"),
       }) {
    if (!err.empty()) return err;
  }
  if (j.size() != 8) return "unexpected extra keys";
  for (const auto& f : j.at("failures")) {
    if (!f.is_object() || !f.contains("index") || !f.contains("sets") || !f.contains("scalars")) {
      return "failure entry lacks index/sets/scalars";
    }
    for (const auto& [name, arr] : f.at("sets").items()) {
      if (!arr.is_array()) return "set '" + name + "' is not an array";
      std::int64_t prev = -1;
      for (const auto& x : arr) {
        if (!x.is_number_integer() || x.get<std::int64_t>() <= prev) {
          return "set '" + name + "' is not a strictly increasing integer array";
        }
        prev = x.get<std::int64_t>();
      }
    }
  }
  return {};
}

LemmaReport report_from_json(const json& j) {
  if (auto why = report_schema_violation(j); !why.empty()) {
    throw Error(Errc::InvalidArgument, "report JSON: " + why);
  }
  const auto p = make_modulus(j.at("p").get<std::uint64_t>());
  LemmaReport r;
  r.lemma = *parse_lemma_id(j.at("lemma").get<std::string>());
  r.mode = j.at("mode") == "exhaustive" ? Mode::Exhaustive : Mode::Random;
  r.p = p.value();
  r.seed = std::stoull(j.at("seed").get<std::string>());
  r.tested = j.at("tested").get<std::uint64_t>();
  r.vacuous = j.at("vacuous").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  for (const auto& f : j.at("failures")) {
    r.failures.push_back({f.at("index").get<std::uint64_t>(), instance_from_json(p, f)});
  }
  return r;
}

namespace {

std::string instance_cell(const BoundInstance& inst) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, s] : inst.sets) {
    os << (first ? "" : ";") << name << "={";
    first = false;
    bool f2 = true;
    s.for_each([&](std::uint32_t x) {
      os << (f2 ? "" : " ") << x;
      f2 = false;
    });
    os << "}";
  }
  for (const auto& [name, v] : inst.scalars) {
    os << (first ? "" : ";") << name << "=" << v;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_csv(const LemmaReport& r) {
  std::ostringstream os;
  os << "lemma,p,mode,seed,index,result,instance\n";
  auto row = [&](std::uint64_t index, CheckResult res, const BoundInstance& inst) {
    os << to_string(r.lemma) << ',' << r.p << ',' << to_string(r.mode) << ',' << r.seed << ','
       << index << ',' << to_string(res) << ",\"" << instance_cell(inst) << "\"\n";
  };
  if (!r.records.empty()) {
    for (const auto& rec : r.records) row(rec.index, rec.result, rec.instance);
  } else {
    for (const auto& f : r.failures) row(f.index, CheckResult::Fails, f.instance);
  }
  return os.str();
}

std::string to_text(const LemmaReport& r) {
  std::ostringstream os;
  os << to_string(r.lemma) << " p=" << r.p << ' ' << to_string(r.mode);
  if (r.mode == Mode::Random) os << " seed=" << r.seed;
  os << ": tested " << r.tested << ", vacuous " << r.vacuous << ", failures " << r.failures.size()
     << " (" << r.elapsed_ms << " ms) " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& f : r.failures) {
    os << "  #" << f.index << ' ' << instance_cell(f.instance) << '\n';
  }
  return os.str();
}

}  // namespace sumprod::harness
