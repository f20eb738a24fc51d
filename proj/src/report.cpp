#include "artin/report.hpp"

#include "artin/hilbert.hpp"
#include "artin/laurent.hpp"
#include "artin/structure.hpp"
#include "artin/toric.hpp"

#include <iomanip>
#include <sstream>

namespace artin {

using nlohmann::json;

namespace {

std::vector<Integer> integer_array(const json& j, const char* field) {
  if (!j.contains(field)) throw InputError(std::string("missing field \"") + field + "\"");
  const json& a = j.at(field);
  if (!a.is_array()) throw InputError(std::string("field \"") + field + "\" is not an array");
  std::vector<Integer> out;
  for (const auto& v : a) {
    if (!v.is_number_integer())
      throw InputError(std::string("field \"") + field + "\" has a non-integer entry");
    out.push_back(v.get<Integer>());
  }
  return out;
}

std::vector<Integer> to_std(const Exponents& v) {
  return {v.begin(), v.end()};
}

ExponentList to_list(const GeneratorSet& G) {
  ExponentList out;
  for (const auto& g : G) out.push_back(to_std(g));
  return out;
}

ExponentList to_list(const std::vector<Exponents>& G) {
  ExponentList out;
  for (const auto& g : G) out.push_back(to_std(g));
  return out;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const FindingEntry& f) {
  j = {{"constraint", f.constraint}, {"lhs", f.lhs}, {"rhs", f.rhs},
       {"slack", f.slack}, {"index", optional_json(f.index)}};
}
void from_json(const json& j, FindingEntry& f) {
  j.at("constraint").get_to(f.constraint);
  j.at("lhs").get_to(f.lhs);
  j.at("rhs").get_to(f.rhs);
  j.at("slack").get_to(f.slack);
  f.index = optional_from<Integer>(j, "index");
}

void to_json(json& j, const SupportEntry& s) { j = {{"t", s.t}, {"L", s.L}, {"N", s.N}}; }
void from_json(const json& j, SupportEntry& s) {
  j.at("t").get_to(s.t);
  j.at("L").get_to(s.L);
  j.at("N").get_to(s.N);
}

void to_json(json& j, const FreeCaseEntry& f) {
  j = {{"pivot", f.pivot}, {"q", f.q}, {"multipliers", f.multipliers},
       {"series_weights", f.series_weights}};
}
void from_json(const json& j, FreeCaseEntry& f) {
  j.at("pivot").get_to(f.pivot);
  j.at("q").get_to(f.q);
  j.at("multipliers").get_to(f.multipliers);
  j.at("series_weights").get_to(f.series_weights);
}

void to_json(json& j, const PresentationEntry& p) {
  j = {{"labels", p.labels}, {"generators", p.generators}};
}
void from_json(const json& j, PresentationEntry& p) {
  j.at("labels").get_to(p.labels);
  j.at("generators").get_to(p.generators);
}

void to_json(json& j, const IdealEntry& e) {
  j = {{"labels", e.labels}, {"groebner_basis", e.groebner_basis},
       {"matches_simple_ideal", optional_json(e.matches_simple_ideal)}};
}
void from_json(const json& j, IdealEntry& e) {
  j.at("labels").get_to(e.labels);
  j.at("groebner_basis").get_to(e.groebner_basis);
  e.matches_simple_ideal = optional_from<bool>(j, "matches_simple_ideal");
}

void to_json(json& j, const LaurentSetEntry& e) {
  j = {{"plain", e.plain}, {"invertible", e.invertible}};
}
void from_json(const json& j, LaurentSetEntry& e) {
  j.at("plain").get_to(e.plain);
  j.at("invertible").get_to(e.invertible);
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw InputError("scenario is not a JSON object");
  if (!j.contains("name")) throw InputError("missing field \"name\"");
  if (!j.at("name").is_string()) throw InputError("field \"name\" is not a string");
  auto degrees = integer_array(j, "degrees");
  auto orders = integer_array(j, "orders");
  if (orders.empty()) throw InputError("field \"orders\" is empty");
  if (degrees.size() != orders.size())
    throw InputError("fields \"degrees\" and \"orders\" differ in length");
  for (Integer d : degrees)
    if (d < 1) throw InputError("field \"degrees\" has a non-positive entry");
  try {
    return Scenario(j.at("name").get<std::string>(), degrees, orders);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

json scenario_to_json(const Scenario& s) {
  return {{"name", s.name()}, {"degrees", to_std(s.degrees())}, {"orders", to_std(s.orders())}};
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

Report build_report(const Scenario& s, const ReportOptions& options) {
  Report rep;
  rep.name = s.name();
  rep.degrees = to_std(s.degrees());
  rep.orders = to_std(s.orders());

  const ValidityReport validity = validate(s);
  rep.valid = validity.valid;
  for (const auto& f : validity.violations)
    rep.violations.push_back({to_string(f.constraint), f.lhs, f.rhs, f.slack,
                              f.index < 0 ? std::nullopt : std::optional<Integer>(f.index + 1)});

  const GeneratorSet basis = hilbert_basis(s);
  rep.artin_holds = artin_holds(s);
  rep.hilbert_basis = to_list(basis);
  rep.generator_count = basis.size();

  const CriterionReport crit = criterion_report(s, basis);
  rep.ideal_zero = crit.ideal_zero;
  for (const auto& c : crit.support_counts) rep.support_counts.push_back({c.t, c.L, c.N});
  rep.criteria_applicable = crit.applicable;
  rep.criteria_consistent = crit.consistent;
  rep.inconsistencies = crit.inconsistencies;

  if (!rep.artin_holds) {
    if (auto w = free_case(s)) {
      FreeCaseEntry f{w->pivot + 1, w->q, {}, to_std(hilbert_series_free(s))};
      for (const auto& [j, m] : w->multipliers) f.multipliers.emplace_back(j + 1, m);
      rep.free_case = std::move(f);
    }
  }

  const bool simple_poles = (s.orders().array() >= -1).all();
  const bool simple_zeros = (s.orders().array() <= 1).all() &&
                            (s.positive_count() > 0 || s.negative_count() == 0);
  if (simple_poles) rep.simple_pole_generators = to_list(simple_pole_generators(s));
  if (simple_zeros) rep.simple_zero_generators = to_list(simple_zero_generators(s));
  const bool both_simple = simple_poles && simple_zeros && !rep.artin_holds && s.positive_count() > 0;
  std::optional<Presentation> both;
  if (both_simple) {
    both = both_simple_generators(s);
    rep.both_simple_generators = PresentationEntry{both->labels, to_list(both->generators)};
  }

  for (Integer n = 0; n <= options.max_n; ++n)
    rep.hilbert_function.push_back(hilbert_function(s, n));

  if (options.with_ideal) {
    IdealEntry entry;
    if (both) {
      const BinomialIdeal gb = toric_groebner(*both);
      const Index p = s.positive_count();
      const Index q = p + s.negative_count();
      entry.labels = gb.labels;
      for (const auto& b : gb.basis) entry.groebner_basis.push_back(to_string(b, gb.labels));
      entry.matches_simple_ideal = ideal_equal(*both, gb, theorem_1_13_ideal(p, q, s.r()));
    } else {
      const Presentation P(basis);
      const BinomialIdeal gb = toric_groebner(P);
      entry.labels = gb.labels;
      for (const auto& b : gb.basis) entry.groebner_basis.push_back(to_string(b, gb.labels));
    }
    rep.toric_ideal = std::move(entry);
  }

  const HeilbronnMonomial h = heilbronn_monomial(s);
  rep.heilbronn_exponents = to_std(h.exponents);
  rep.heilbronn_ord = h.ord;
  rep.heilbronn_absolute_order_sum = h.absolute_order_sum;
  if (rep.free_case) {
    const auto G = prop_2_2_generators(s);
    rep.laurent_free_generators = LaurentSetEntry{to_list(G.plain), to_list(G.invertible)};
  }
  if (both_simple) {
    const auto G = prop_2_3_generators(s);
    rep.laurent_simple_generators = LaurentSetEntry{to_list(G.plain), to_list(G.invertible)};
  }
  return rep;
}

void to_json(json& j, const Report& r) {
  j = json::object();
  j["scenario"] = {{"name", r.name}, {"degrees", r.degrees}, {"orders", r.orders}};
  j["validity"] = {{"valid", r.valid}, {"violations", r.violations}};
  j["artin_holds"] = r.artin_holds;
  j["hilbert_basis"] = r.hilbert_basis;
  j["generator_count"] = r.generator_count;
  j["ideal_zero"] = r.ideal_zero;
  j["support_counts"] = r.support_counts;
  j["free_case"] = optional_json(r.free_case);
  j["simple_pole_generators"] = optional_json(r.simple_pole_generators);
  j["simple_zero_generators"] = optional_json(r.simple_zero_generators);
  j["both_simple_generators"] = optional_json(r.both_simple_generators);
  j["hilbert_function"] = r.hilbert_function;
  j["toric_ideal"] = optional_json(r.toric_ideal);
  j["laurent"] = {
      {"heilbronn", {{"exponents", r.heilbronn_exponents},
                     {"ord", r.heilbronn_ord},
                     {"absolute_order_sum", r.heilbronn_absolute_order_sum}}},
      {"free_generators", optional_json(r.laurent_free_generators)},
      {"simple_generators", optional_json(r.laurent_simple_generators)}};
  j["criteria"] = {{"applicable", r.criteria_applicable},
                   {"consistent", r.criteria_consistent},
                   {"inconsistencies", r.inconsistencies}};
}

void from_json(const json& j, Report& r) {
  const json& sc = j.at("scenario");
  sc.at("name").get_to(r.name);
  sc.at("degrees").get_to(r.degrees);
  sc.at("orders").get_to(r.orders);
  j.at("validity").at("valid").get_to(r.valid);
  j.at("validity").at("violations").get_to(r.violations);
  j.at("artin_holds").get_to(r.artin_holds);
  j.at("hilbert_basis").get_to(r.hilbert_basis);
  j.at("generator_count").get_to(r.generator_count);
  j.at("ideal_zero").get_to(r.ideal_zero);
  j.at("support_counts").get_to(r.support_counts);
  r.free_case = optional_from<FreeCaseEntry>(j, "free_case");
  r.simple_pole_generators = optional_from<ExponentList>(j, "simple_pole_generators");
  r.simple_zero_generators = optional_from<ExponentList>(j, "simple_zero_generators");
  r.both_simple_generators = optional_from<PresentationEntry>(j, "both_simple_generators");
  j.at("hilbert_function").get_to(r.hilbert_function);
  r.toric_ideal = optional_from<IdealEntry>(j, "toric_ideal");
  const json& la = j.at("laurent");
  la.at("heilbronn").at("exponents").get_to(r.heilbronn_exponents);
  la.at("heilbronn").at("ord").get_to(r.heilbronn_ord);
  la.at("heilbronn").at("absolute_order_sum").get_to(r.heilbronn_absolute_order_sum);
  r.laurent_free_generators = optional_from<LaurentSetEntry>(la, "free_generators");
  r.laurent_simple_generators = optional_from<LaurentSetEntry>(la, "simple_generators");
  const json& cr = j.at("criteria");
  cr.at("applicable").get_to(r.criteria_applicable);
  cr.at("consistent").get_to(r.criteria_consistent);
  cr.at("inconsistencies").get_to(r.inconsistencies);
}

std::string monomial_string(const std::vector<Integer>& exponents) {
  std::string out;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(j + 1);
    if (exponents[j] != 1) out += "^" + std::to_string(exponents[j]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string join_ints(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string join_monomials(const ExponentList& list) {
  if (list.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? ", " : "") + monomial_string(list[i]);
  return out;
}

class Table {
public:
  void row(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  std::string str() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows_)
      os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
    return os.str();
  }

private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string findings_text(const std::vector<FindingEntry>& violations) {
  std::string out;
  for (const auto& f : violations) {
    if (!out.empty()) out += "; ";
    out += f.constraint + " (" + std::to_string(f.lhs) + " < " + std::to_string(f.rhs) +
           ", slack " + std::to_string(f.slack) + ")";
  }
  return out;
}

std::vector<FindingEntry> entries(const ValidityReport& v) {
  std::vector<FindingEntry> out;
  for (const auto& f : v.violations)
    out.push_back({to_string(f.constraint), f.lhs, f.rhs, f.slack,
                   f.index < 0 ? std::nullopt : std::optional<Integer>(f.index + 1)});
  return out;
}

}  // namespace

std::string render_text(const Report& r) {
  Table t;
  t.row("scenario", r.name);
  t.row("degrees", join_ints(r.degrees));
  t.row("orders", join_ints(r.orders));
  t.row("valid", r.valid ? "yes" : "no: " + findings_text(r.violations));
  t.row("artin holds", yes_no(r.artin_holds));
  t.row("hilbert basis", join_monomials(r.hilbert_basis));
  t.row("generators", std::to_string(r.generator_count));
  t.row("ideal zero", yes_no(r.ideal_zero));
  for (const auto& c : r.support_counts)
    t.row("L_" + std::to_string(c.t) + " / N_" + std::to_string(c.t),
          std::to_string(c.L) + " / " + std::to_string(c.N) + (c.L >= c.N ? "  reached" : ""));
  if (r.free_case) {
    std::string m;
    for (const auto& [j, v] : r.free_case->multipliers)
      m += (m.empty() ? "" : ", ") + ("m" + std::to_string(j)) + "=" + std::to_string(v);
    t.row("free case", "pivot x" + std::to_string(r.free_case->pivot) + ", q=" +
                           std::to_string(r.free_case->q) + (m.empty() ? "" : ", " + m));
    t.row("series weights", join_ints(r.free_case->series_weights));
  } else {
    t.row("free case", "-");
  }
  if (r.simple_pole_generators) t.row("simple-pole set", join_monomials(*r.simple_pole_generators));
  if (r.simple_zero_generators) t.row("simple-zero set", join_monomials(*r.simple_zero_generators));
  if (r.both_simple_generators)
    t.row("simple presentation", join_monomials(r.both_simple_generators->generators));
  t.row("hilbert function", join_ints(r.hilbert_function));
  if (r.toric_ideal) {
    std::string gb;
    for (const auto& b : r.toric_ideal->groebner_basis) gb += (gb.empty() ? "" : ", ") + b;
    t.row("toric ideal", gb.empty() ? "(0)" : gb);
    if (r.toric_ideal->matches_simple_ideal)
      t.row("matches simple ideal", yes_no(*r.toric_ideal->matches_simple_ideal));
  }
  t.row("heilbronn exponents", join_ints(r.heilbronn_exponents));
  t.row("heilbronn ord", std::to_string(r.heilbronn_ord) + " (sum |l_j| = " +
                             std::to_string(r.heilbronn_absolute_order_sum) + ")");
  if (r.laurent_free_generators)
    t.row("laurent free", join_monomials(r.laurent_free_generators->plain) + " | +-" +
                              join_monomials(r.laurent_free_generators->invertible));
  if (r.laurent_simple_generators)
    t.row("laurent simple", join_monomials(r.laurent_simple_generators->plain) + " | +-" +
                                join_monomials(r.laurent_simple_generators->invertible));
  if (!r.criteria_applicable) t.row("criteria", "not applicable (r = 1)");
  else if (r.criteria_consistent) t.row("criteria", "consistent");
  else {
    std::string bad;
    for (const auto& s : r.inconsistencies) bad += (bad.empty() ? "" : "; ") + s;
    t.row("criteria", "INCONSISTENT: " + bad);
  }
  return t.str();
}

json validity_to_json(const Scenario& s, const ValidityReport& v) {
  return {{"scenario", scenario_to_json(s)}, {"valid", v.valid}, {"violations", entries(v)}};
}

std::string render_validity(const Scenario& s, const ValidityReport& v) {
  Table t;
  t.row("scenario", s.name());
  t.row("valid", yes_no(v.valid));
  for (const auto& f : entries(v)) {
    t.row(f.constraint, std::to_string(f.lhs) + " < " + std::to_string(f.rhs) + "  slack " +
                            std::to_string(f.slack) +
                            (f.index ? "  index " + std::to_string(*f.index) : ""));
  }
  return t.str();
}

}  // namespace artin
