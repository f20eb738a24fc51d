#pragma once

// Scenario files and the full per-scenario report emitted by the CLI.

#include "artin/core.hpp"
#include "artin/semigroup.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace artin {

/// Malformed or unreadable input; the message names the offending field.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// {"name": string, "degrees": [int...], "orders": [int...]}
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);
Scenario parse_scenario(const std::string& text);

struct ReportOptions {
  Integer max_n = 10;
  bool with_ideal = false;
};

using ExponentList = std::vector<std::vector<Integer>>;

struct FindingEntry {
  std::string constraint;
  Integer lhs = 0;
  Integer rhs = 0;
  Integer slack = 0;
  std::optional<Integer> index;  // 1-based

  friend bool operator==(const FindingEntry&, const FindingEntry&) = default;
};

struct SupportEntry {
  Integer t = 0;
  Integer L = 0;
  Integer N = 0;

  friend bool operator==(const SupportEntry&, const SupportEntry&) = default;
};

struct FreeCaseEntry {
  Integer pivot = 0;  // 1-based
  Integer q = 0;
  std::vector<std::pair<Integer, Integer>> multipliers;  // (1-based pole, m)
  std::vector<Integer> series_weights;

  friend bool operator==(const FreeCaseEntry&, const FreeCaseEntry&) = default;
};

struct PresentationEntry {
  std::vector<std::string> labels;
  ExponentList generators;

  friend bool operator==(const PresentationEntry&, const PresentationEntry&) = default;
};

struct IdealEntry {
  std::vector<std::string> labels;
  std::vector<std::string> groebner_basis;
  std::optional<bool> matches_simple_ideal;

  friend bool operator==(const IdealEntry&, const IdealEntry&) = default;
};

struct LaurentSetEntry {
  ExponentList plain;
  ExponentList invertible;

  friend bool operator==(const LaurentSetEntry&, const LaurentSetEntry&) = default;
};

struct Report {
  std::string name;
  std::vector<Integer> degrees;
  std::vector<Integer> orders;

  bool valid = true;
  std::vector<FindingEntry> violations;

  bool artin_holds = false;
  ExponentList hilbert_basis;
  std::size_t generator_count = 0;
  bool ideal_zero = false;
  std::vector<SupportEntry> support_counts;
  std::optional<FreeCaseEntry> free_case;
  std::optional<ExponentList> simple_pole_generators;
  std::optional<ExponentList> simple_zero_generators;
  std::optional<PresentationEntry> both_simple_generators;
  std::vector<Integer> hilbert_function;
  std::optional<IdealEntry> toric_ideal;

  std::vector<Integer> heilbronn_exponents;
  Integer heilbronn_ord = 0;
  Integer heilbronn_absolute_order_sum = 0;
  std::optional<LaurentSetEntry> laurent_free_generators;
  std::optional<LaurentSetEntry> laurent_simple_generators;

  bool criteria_applicable = false;
  bool criteria_consistent = true;
  std::vector<std::string> inconsistencies;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Runs every computation for one scenario. May throw GuardrailError.
Report build_report(const Scenario& s, const ReportOptions& options = {});

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// Aligned human-readable rendering.
std::string render_text(const Report& r);

/// Validity section only.
nlohmann::json validity_to_json(const Scenario& s, const ValidityReport& v);
std::string render_validity(const Scenario& s, const ValidityReport& v);

std::string monomial_string(const std::vector<Integer>& exponents);

}  // namespace artin
