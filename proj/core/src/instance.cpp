#include <array>
#include <utility>

#include "sumprod/error.hpp"
#include "sumprod/harness.hpp"

namespace sumprod::harness {

namespace {

constexpr std::array<std::pair<LemmaId, std::string_view>, 18> kNames{{
    {LemmaId::CD, "CD"}, {LemmaId::P1, "P1"}, {LemmaId::L1, "L1"},   {LemmaId::L2, "L2"},
    {LemmaId::L3, "L3"}, {LemmaId::L4, "L4"}, {LemmaId::L5, "L5"},   {LemmaId::L6, "L6"},
    {LemmaId::L7, "L7"}, {LemmaId::C3, "C3"}, {LemmaId::C4, "C4"},   {LemmaId::C5, "C5"},
    {LemmaId::C6, "C6"}, {LemmaId::C7, "C7"}, {LemmaId::L8, "L8"},   {LemmaId::L9, "L9"},
    {LemmaId::L10, "L10"}, {LemmaId::T1, "T1"},
}};

}  // namespace

std::string_view to_string(LemmaId id) noexcept {
  for (const auto& [k, v] : kNames) {
    if (k == id) return v;
  }
  return "?";
}

std::optional<LemmaId> parse_lemma_id(std::string_view text) noexcept {
  for (const auto& [k, v] : kNames) {
    if (v == text) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Mode m) noexcept {
  return m == Mode::Exhaustive ? "exhaustive" : "random";
}

std::string_view to_string(CheckResult r) noexcept {
  switch (r) {
    case CheckResult::Holds: return "holds";
    case CheckResult::Fails: return "fails";
    case CheckResult::VacuouslyTrue: return "vacuous";
  }
  return "?";
}

const ZpSet& BoundInstance::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw Error(Errc::MissingBinding, "instance has no set '" + name + "'");
  return it->second;
}

std::int64_t BoundInstance::scalar(const std::string& name) const {
  auto it = scalars.find(name);
  if (it == scalars.end()) throw Error(Errc::MissingBinding, "instance has no scalar '" + name + "'");
  return it->second;
}

BoundInstance& BoundInstance::with(const std::string& name, ZpSet s) {
  require_same_modulus(s, p);
  sets.insert_or_assign(name, std::move(s));
  return *this;
}

BoundInstance& BoundInstance::with(const std::string& name, std::int64_t v) {
  scalars.insert_or_assign(name, v);
  return *this;
}

}  // namespace sumprod::harness
