// Copyright 2026 The Modality Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Hierarchical modal sense taxonomy.
//
//   Priority      ── rules_norms (deontic)
//                 ├─ desires_wishes (bouletic)  ┐
//                 └─ plans_goals (teleological) ┘ conflated: intentions
//   Plausibility  ── knowledge (epistemic)
//                 ├─ world (circumstantial)
//                 └─ agent (dynamic)
//
// Canonical label strings are the snake_case identifiers above; they are what
// appears in tag columns and metric reports. The CamelCase spellings
// (RulesNorms, PlansGoals, ...) are accepted on input as aliases.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace modality {

enum class FineSense : std::uint8_t {
  RulesNorms,
  DesiresWishes,
  PlansGoals,
  Knowledge,
  World,
  Agent,
};

enum class ConflatedSense : std::uint8_t {
  RulesNorms,
  Intentions,
  Knowledge,
  World,
  Agent,
};

enum class CoarseSense : std::uint8_t { Priority, Plausibility };

// Ordered from coarsest to finest.
enum class Granularity : std::uint8_t { Binary, Coarse, FineConflated, FineFull };

enum class LegacySense : std::uint8_t { Deontic, Dynamic, Epistemic };

inline constexpr std::array<FineSense, 6> kFineSenses = {
    FineSense::RulesNorms, FineSense::DesiresWishes, FineSense::PlansGoals,
    FineSense::Knowledge,  FineSense::World,         FineSense::Agent};

inline constexpr std::array<ConflatedSense, 5> kConflatedSenses = {
    ConflatedSense::RulesNorms, ConflatedSense::Intentions,
    ConflatedSense::Knowledge, ConflatedSense::World, ConflatedSense::Agent};

inline constexpr std::array<CoarseSense, 2> kCoarseSenses = {
    CoarseSense::Priority, CoarseSense::Plausibility};

inline constexpr std::array<Granularity, 4> kGranularities = {
    Granularity::Binary, Granularity::Coarse, Granularity::FineConflated,
    Granularity::FineFull};

constexpr CoarseSense coarsen(FineSense s) {
  switch (s) {
    case FineSense::RulesNorms:
    case FineSense::DesiresWishes:
    case FineSense::PlansGoals:
      return CoarseSense::Priority;
    case FineSense::Knowledge:
    case FineSense::World:
    case FineSense::Agent:
      return CoarseSense::Plausibility;
  }
  return CoarseSense::Plausibility;
}

constexpr ConflatedSense conflate(FineSense s) {
  switch (s) {
    case FineSense::RulesNorms: return ConflatedSense::RulesNorms;
    case FineSense::DesiresWishes:
    case FineSense::PlansGoals: return ConflatedSense::Intentions;
    case FineSense::Knowledge: return ConflatedSense::Knowledge;
    case FineSense::World: return ConflatedSense::World;
    case FineSense::Agent: return ConflatedSense::Agent;
  }
  return ConflatedSense::Agent;
}

constexpr CoarseSense coarsen(ConflatedSense s) {
  switch (s) {
    case ConflatedSense::RulesNorms:
    case ConflatedSense::Intentions:
      return CoarseSense::Priority;
    default:
      return CoarseSense::Plausibility;
  }
}

// Maps onto the three-way deontic/dynamic/epistemic label set used by older
// sentence-classification datasets. World has no counterpart and yields
// nullopt. Fine Priority-branch senses must be coarsened by the caller first;
// passing one throws std::invalid_argument.
inline std::optional<LegacySense> map_legacy(
    std::variant<CoarseSense, FineSense> s) {
  if (const auto* coarse = std::get_if<CoarseSense>(&s)) {
    if (*coarse == CoarseSense::Priority) return LegacySense::Deontic;
    throw std::invalid_argument(
        "map_legacy: Plausibility has no single legacy counterpart; pass the "
        "fine sense");
  }
  switch (std::get<FineSense>(s)) {
    case FineSense::Agent: return LegacySense::Dynamic;
    case FineSense::Knowledge: return LegacySense::Epistemic;
    case FineSense::World: return std::nullopt;
    default:
      throw std::invalid_argument(
          "map_legacy: fine Priority-branch sense must be coarsened first");
  }
}

// Legacy label for a fine sense, coarsening Priority-branch senses first.
inline std::optional<LegacySense> to_legacy(FineSense s) {
  if (coarsen(s) == CoarseSense::Priority) return map_legacy(CoarseSense::Priority);
  return map_legacy(s);
}

constexpr std::string_view to_string(FineSense s) {
  switch (s) {
    case FineSense::RulesNorms: return "rules_norms";
    case FineSense::DesiresWishes: return "desires_wishes";
    case FineSense::PlansGoals: return "plans_goals";
    case FineSense::Knowledge: return "knowledge";
    case FineSense::World: return "world";
    case FineSense::Agent: return "agent";
  }
  return "";
}

constexpr std::string_view to_string(ConflatedSense s) {
  switch (s) {
    case ConflatedSense::RulesNorms: return "rules_norms";
    case ConflatedSense::Intentions: return "intentions";
    case ConflatedSense::Knowledge: return "knowledge";
    case ConflatedSense::World: return "world";
    case ConflatedSense::Agent: return "agent";
  }
  return "";
}

constexpr std::string_view to_string(CoarseSense s) {
  return s == CoarseSense::Priority ? "priority" : "plausibility";
}

constexpr std::string_view to_string(LegacySense s) {
  switch (s) {
    case LegacySense::Deontic: return "deontic";
    case LegacySense::Dynamic: return "dynamic";
    case LegacySense::Epistemic: return "epistemic";
  }
  return "";
}

constexpr std::string_view to_string(Granularity g) {
  switch (g) {
    case Granularity::Binary: return "binary";
    case Granularity::Coarse: return "coarse";
    case Granularity::FineConflated: return "fine";
    case Granularity::FineFull: return "fine_full";
  }
  return "";
}

// Human-readable names used in report headers.
constexpr std::string_view display_name(FineSense s) {
  switch (s) {
    case FineSense::RulesNorms: return "Rules & Norms";
    case FineSense::DesiresWishes: return "Desires & Wishes";
    case FineSense::PlansGoals: return "Plans & Goals";
    case FineSense::Knowledge: return "Knowledge";
    case FineSense::World: return "World";
    case FineSense::Agent: return "Agent";
  }
  return "";
}

inline std::optional<Granularity> parse_granularity(std::string_view s) {
  if (s == "binary" || s == "modal") return Granularity::Binary;
  if (s == "coarse") return Granularity::Coarse;
  if (s == "fine" || s == "fine_conflated") return Granularity::FineConflated;
  if (s == "fine_full") return Granularity::FineFull;
  return std::nullopt;
}

inline std::optional<FineSense> parse_fine_sense(std::string_view s) {
  static constexpr std::array<std::string_view, 6> kAliases = {
      "RulesNorms", "DesiresWishes", "PlansGoals", "Knowledge", "World", "Agent"};
  for (std::size_t i = 0; i < kFineSenses.size(); ++i) {
    if (s == to_string(kFineSenses[i]) || s == kAliases[i]) return kFineSenses[i];
  }
  return std::nullopt;
}

// A sense label at whatever level its spelling identifies. Strings shared by
// the fine and conflated levels (rules_norms, knowledge, ...) parse as fine.
using SenseLabel = std::variant<FineSense, ConflatedSense, CoarseSense>;

inline std::optional<SenseLabel> parse_sense_label(std::string_view s) {
  if (auto fine = parse_fine_sense(s)) return *fine;
  if (s == "intentions" || s == "Intentions") return ConflatedSense::Intentions;
  if (s == "priority" || s == "Priority") return CoarseSense::Priority;
  if (s == "plausibility" || s == "Plausibility") return CoarseSense::Plausibility;
  return std::nullopt;
}

// Finest granularity at which a label is defined.
inline Granularity level_of(const SenseLabel& label) {
  if (std::holds_alternative<FineSense>(label)) return Granularity::FineFull;
  if (std::holds_alternative<ConflatedSense>(label)) return Granularity::FineConflated;
  return Granularity::Coarse;
}

// Label string of a fine sense viewed at granularity g ("" at Binary).
inline std::string label_at(FineSense s, Granularity g) {
  switch (g) {
    case Granularity::Binary: return "";
    case Granularity::Coarse: return std::string(to_string(coarsen(s)));
    case Granularity::FineConflated: return std::string(to_string(conflate(s)));
    case Granularity::FineFull: return std::string(to_string(s));
  }
  return "";
}

// Rewrites a label string to granularity g. Projection only moves toward the
// root; asking for a finer level than the label carries throws
// std::invalid_argument. Unknown labels also throw.
inline std::string project_label(std::string_view label, Granularity g) {
  if (g == Granularity::Binary) return "";
  if (label.empty()) {
    throw std::invalid_argument("cannot refine a binary label");
  }
  auto parsed = parse_sense_label(label);
  if (!parsed) {
    throw std::invalid_argument("unknown sense label '" + std::string(label) + "'");
  }
  if (const auto* fine = std::get_if<FineSense>(&*parsed)) return label_at(*fine, g);
  if (g > level_of(*parsed)) {
    throw std::invalid_argument("cannot refine label '" + std::string(label) +
                                "' to " + std::string(to_string(g)));
  }
  if (const auto* conflated = std::get_if<ConflatedSense>(&*parsed)) {
    if (g == Granularity::FineConflated) return std::string(to_string(*conflated));
    return std::string(to_string(coarsen(*conflated)));
  }
  return std::string(to_string(std::get<CoarseSense>(*parsed)));
}

// True when `label` is a canonical label string of granularity g.
inline bool is_label_at(std::string_view label, Granularity g) {
  switch (g) {
    case Granularity::Binary:
      return label.empty();
    case Granularity::Coarse:
      return label == "priority" || label == "plausibility";
    case Granularity::FineConflated:
      for (auto s : kConflatedSenses) {
        if (label == to_string(s)) return true;
      }
      return false;
    case Granularity::FineFull:
      for (auto s : kFineSenses) {
        if (label == to_string(s)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace modality
