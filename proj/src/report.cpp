#include "pgt/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "pgt/group_ops.hpp"

namespace pgt {

namespace {

class StageTimer {
 public:
  explicit StageTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}

  template <class F>
  auto operator()(const char* stage, F&& work) {
    const auto start = std::chrono::steady_clock::now();
    auto result = work();
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    sink_.emplace_back(stage, elapsed.count());
    return result;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
};

template <class T>
nlohmann::json or_null(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

}  // namespace

PseudoReport pseudo_report(const PermGroup& group, std::string spec_text,
                           const ReportOptions& options) {
  PseudoReport r;
  r.spec = std::move(spec_text);
  r.degree = group.degree();
  StageTimer time(r.timings_ms);

  r.order = time("enumerate", [&] { return group.elements().size(); });
  const SubgroupSet centre = time("centre", [&] { return center(group); });
  const SubgroupSet derived = time("derived", [&] { return derived_subgroup(group); });
  r.centre_order = centre.size();
  r.derived_order = derived.size();
  r.second_derived_order = time("second_derived", [&] {
    std::vector<PermGroup> ds = derived_series(group);
    return ds[std::min<std::size_t>(2, ds.size() - 1)].order_u64();
  });
  if (options.scope == ReportScope::Info) return r;

  const SubgroupSet p = time("pseudocentre", [&] { return pseudocentre(group, options.threads); });
  r.pseudocentre_order = p.size();
  r.is_pseudocentral = p.size() == r.order;
  r.p_equals_centre = p == centre;
  r.p_equals_derived = p == derived;
  if (options.include_elements) r.elements.assign(p.begin(), p.end());
  if (options.scope == ReportScope::Pseudocentre) return r;

  const PseudoSeries s = time("series", [&] {
    return upper_pseudocentral_series(group, options.max_steps, options.threads);
  });
  r.series = s.sizes();
  if (s.reaches_group) r.pseudo_class = s.terms.size() - 1;
  return r;
}

std::string report_json(const PseudoReport& r, int indent) {
  nlohmann::ordered_json j;
  j["spec"] = r.spec;
  j["degree"] = r.degree;
  j["order"] = r.order;
  j["centre_order"] = r.centre_order;
  j["derived_order"] = r.derived_order;
  j["pseudocentre_order"] = or_null(r.pseudocentre_order);
  j["flags"] = {{"is_pseudocentral", or_null(r.is_pseudocentral)},
                {"p_equals_centre", or_null(r.p_equals_centre)},
                {"p_equals_derived", or_null(r.p_equals_derived)}};
  j["series"] = or_null(r.series);
  j["class"] = or_null(r.pseudo_class);
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
  j["timings_ms"] = std::move(timings);
  if (!r.elements.empty()) {
    nlohmann::json list = nlohmann::json::array();
    for (const Permutation& e : r.elements) {
      list.push_back(std::vector<std::uint32_t>(e.images().begin(), e.images().end()));
    }
    j["elements"] = std::move(list);
  }
  return j.dump(indent);
}

std::string report_text(const PseudoReport& r) {
  std::ostringstream out;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "group          " << r.spec << "\n"
      << "degree         " << r.degree << "\n"
      << "|G|            " << r.order << "\n"
      << "|Z(G)|         " << r.centre_order << "\n"
      << "|G'|           " << r.derived_order << "\n"
      << "|G''|          " << r.second_derived_order << "\n";
  if (r.pseudocentre_order) {
    out << "|P(G)|         " << *r.pseudocentre_order << "\n"
        << "P = G          " << yes_no(*r.is_pseudocentral) << "\n"
        << "P = Z(G)       " << yes_no(*r.p_equals_centre) << "\n"
        << "P = G'         " << yes_no(*r.p_equals_derived) << "\n";
  }
  if (r.series) {
    out << "series         [";
    for (std::size_t i = 0; i < r.series->size(); ++i) out << (i ? ", " : "") << (*r.series)[i];
    out << "]\n";
    if (r.pseudo_class) {
      out << "class          " << *r.pseudo_class << "\n";
    } else {
      out << "class          did not stabilize at G within step limit\n";
    }
  }
  if (!r.elements.empty()) {
    out << "elements of P(G):\n";
    for (const Permutation& e : r.elements) out << "  " << e.to_cycle_string() << "\n";
  }
  return out.str();
}

}  // namespace pgt
