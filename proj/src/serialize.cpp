#include "ohg/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace ohg {

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

Json one_based(const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int v : vertices) out.push_back(v + 1);
  return out;
}

Json optional_number(const std::optional<double>& x) {
  return x ? Json(round15(*x)) : Json(nullptr);
}

Json holds_flag(Verdict v) {
  if (v == Verdict::Holds) return true;
  if (v == Verdict::Fails) return false;
  return nullptr;
}

void add_verdict(Json& j, Verdict v) {
  j["holds"] = holds_flag(v);
  j["verdict"] = to_string(v);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", round15(x));
  return buf;
}

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : "n/a"; }

}  // namespace

Json to_json(const SpectralSummary& s) {
  Json values = Json::array();
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) values.push_back(round15(s.eigenvalues(i)));
  return Json{{"eigenvalues", values},
              {"counts",
               {{"below_one", s.counts.below_one},
                {"at_one", s.counts.at_one},
                {"above_one", s.counts.above_one}}}};
}

Json to_json(const InvariantSet& inv) {
  return Json{
      {"alpha", {{"value", inv.alpha.size}, {"witness", one_based(inv.alpha.vertices)}}},
      {"alpha_w", {{"value", inv.alpha_w.size}, {"witness", one_based(inv.alpha_w.vertices)}}},
      {"omega", {{"value", inv.omega.size}, {"witness", one_based(inv.omega.vertices)}}},
      {"chi", {{"value", inv.chi.colors}, {"coloring", inv.chi.coloring}}},
  };
}

Json to_json(const GramFeasibility& probe, bool with_witness) {
  Json j{{"t", round15(probe.t)},
         {"status", to_string(probe.status)},
         {"feasible", probe.status == Feasibility::Feasible},
         {"residual", round15(probe.residual)},
         {"iterations", probe.iterations},
         {"certified", probe.certified}};
  if (with_witness) {
    if (probe.witness) {
      Json rows = Json::array();
      for (Eigen::Index i = 0; i < probe.witness->rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < probe.witness->cols(); ++k) row.push_back(round15((*probe.witness)(i, k)));
        rows.push_back(std::move(row));
      }
      j["witness"] = std::move(rows);
    } else {
      j["witness"] = nullptr;
    }
  }
  return j;
}

Json to_json(const PartitionResult& p) {
  Json parts = Json::array();
  Json extremes = Json::array();
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    parts.push_back(one_based(p.parts[i]));
    extremes.push_back({round15(p.per_part_extremes[i].first), round15(p.per_part_extremes[i].second)});
  }
  return Json{{"lambda", round15(p.lambda)},
              {"kind", to_string(p.kind)},
              {"k", p.k},
              {"parts", parts},
              {"part_extremes", extremes}};
}

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["profile"] = {{"degrees", r.profile.degrees},
                  {"regular_degree", r.profile.regular_degree ? Json(*r.profile.regular_degree) : Json(nullptr)},
                  {"io_balanced", r.profile.io_balanced},
                  {"is_graph", r.profile.is_graph}};
  j["spectrum"] = to_json(r.spectrum);
  j["invariants"] = to_json(r.invariants);

  Json probes = Json::array();
  for (const auto& p : r.chi_v.probes) probes.push_back(to_json(p, false));
  j["chi_v"] = {{"value", round15(r.chi_v.value)},
                {"lower_confidence", r.chi_v.lower_confidence},
                {"probes", probes}};

  Json inertia{{"alpha", r.inertia.alpha},
               {"alpha_w", r.inertia.alpha_w},
               {"bound", r.inertia.bound},
               {"sharp", r.inertia.sharp}};
  add_verdict(inertia, r.inertia.verdict);
  j["inertia"] = inertia;

  Json ratio{{"applicable", r.ratio.applicable},
             {"alpha", r.ratio.alpha},
             {"bound", optional_number(r.ratio.bound)},
             {"equality", r.ratio.equality}};
  if (r.ratio.equality_checks) {
    const auto& e = *r.ratio.equality_checks;
    ratio["equality_checks"] = {
        {"alpha_at_most_half", e.alpha_at_most_half},
        {"bipartite_graph", e.bipartite_graph ? Json(*e.bipartite_graph) : Json(nullptr)},
        {"simple_graph", e.simple_graph ? Json(*e.simple_graph) : Json(nullptr)},
        {"complement_degree", optional_number(e.complement_degree)},
        {"complement_regular", e.complement_regular ? Json(*e.complement_regular) : Json(nullptr)},
        {"holds", e.holds}};
  } else {
    ratio["equality_checks"] = nullptr;
  }
  add_verdict(ratio, r.ratio.verdict);
  j["ratio"] = ratio;

  Json sandwich{{"omega", r.sandwich.omega},
                {"chi_v", round15(r.sandwich.chi_v)},
                {"chi", r.sandwich.chi},
                {"lower_confidence", r.sandwich.lower_confidence}};
  add_verdict(sandwich, r.sandwich.verdict);
  j["sandwich"] = sandwich;

  auto spread = [](const SpreadBoundCheck& c) {
    Json s{{"applicable", c.bound.has_value()}, {"bound", optional_number(c.bound)}, {"value", round15(c.value)}};
    add_verdict(s, c.verdict);
    return s;
  };
  j["chi_v_lower"] = spread(r.chi_v_lower);
  j["chi_lower"] = spread(r.chi_lower);

  Json grid = Json::array();
  for (const auto& p : r.partition_at) {
    Json e{{"lambda", round15(p.lambda)},
           {"N_leq", p.leq ? Json(p.leq->k) : Json(nullptr)},
           {"N_geq", p.geq ? Json(p.geq->k) : Json(nullptr)},
           {"lower_leq", optional_number(p.lower_leq)},
           {"lower_geq", optional_number(p.lower_geq)},
           {"leq_partition", p.leq ? to_json(*p.leq) : Json(nullptr)},
           {"geq_partition", p.geq ? to_json(*p.geq) : Json(nullptr)}};
    add_verdict(e, p.verdict);
    grid.push_back(std::move(e));
  }
  j["partition_at"] = grid;

  const bool skipped = r.partition_at_one.verdict == Verdict::Skipped;
  Json one{{"N_geq", skipped ? Json(nullptr) : Json(r.partition_at_one.n_geq)},
           {"N_leq", skipped ? Json(nullptr) : Json(r.partition_at_one.n_leq)},
           {"chi", r.partition_at_one.chi},
           {"is_graph", r.partition_at_one.is_graph}};
  add_verdict(one, r.partition_at_one.verdict);
  j["partition_at_one"] = one;

  Json trace{{"sum_eigenvalues", round15(r.trace_check.sum_eigenvalues)},
             {"n", r.trace_check.n},
             {"nonnegative", r.trace_check.nonnegative}};
  add_verdict(trace, r.trace_check.verdict);
  j["trace_check"] = trace;

  Json w{{"alpha", r.witnesses.alpha},
         {"alpha_w", r.witnesses.alpha_w},
         {"omega", r.witnesses.omega},
         {"chi", r.witnesses.chi},
         {"chi_v", r.witnesses.chi_v}};
  add_verdict(w, r.witnesses.verdict);
  j["witnesses"] = w;

  j["all_hold"] = r.all_hold();
  return j;
}

std::string render_text(const SpectralSummary& s) {
  std::ostringstream out;
  out << "eigenvalues:";
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) out << ' ' << fmt(s.eigenvalues(i));
  out << "\ncounts: below_one=" << s.counts.below_one << " at_one=" << s.counts.at_one
      << " above_one=" << s.counts.above_one << '\n';
  return out.str();
}

std::string render_text(const BoundReport& r) {
  std::ostringstream out;
  auto line = [&](const std::string& name, const std::string& lhs, const std::string& rel,
                  const std::string& rhs, Verdict v) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-18s %-28s %-3s %-28s %s\n", name.c_str(), lhs.c_str(), rel.c_str(),
                  rhs.c_str(), to_string(v));
    out << buf;
  };
  const auto& inv = r.invariants;
  out << "n=" << r.n << "  spectrum:";
  for (Eigen::Index i = 0; i < r.spectrum.eigenvalues.size(); ++i) out << ' ' << fmt(r.spectrum.eigenvalues(i));
  out << '\n';
  out << "alpha=" << inv.alpha.size << " alpha_w=" << inv.alpha_w.size << " omega=" << inv.omega.size
      << " chi=" << inv.chi.colors << " chi_v=" << fmt(r.chi_v.value)
      << (r.chi_v.lower_confidence ? " (lower confidence)" : "") << '\n';

  line("inertia", "alpha=" + std::to_string(r.inertia.alpha) + " alpha_w=" + std::to_string(r.inertia.alpha_w),
       "<=", "bound=" + std::to_string(r.inertia.bound) + (r.inertia.sharp ? " (sharp)" : ""),
       r.inertia.verdict);
  line("ratio", "alpha=" + std::to_string(r.ratio.alpha), "<=",
       "bound=" + fmt(r.ratio.bound) + (r.ratio.equality ? " (equality)" : ""), r.ratio.verdict);
  line("sandwich", "omega=" + std::to_string(r.sandwich.omega) + " chi_v=" + fmt(r.sandwich.chi_v), "<=",
       "chi=" + std::to_string(r.sandwich.chi), r.sandwich.verdict);
  line("chi_v_lower", "chi_v=" + fmt(r.chi_v_lower.value), ">=", "bound=" + fmt(r.chi_v_lower.bound),
       r.chi_v_lower.verdict);
  line("chi_lower", "chi=" + fmt(r.chi_lower.value), ">=", "bound=" + fmt(r.chi_lower.bound),
       r.chi_lower.verdict);
  for (const auto& p : r.partition_at) {
    std::string lhs;
    std::string rhs;
    if (p.leq) lhs += "N_leq=" + std::to_string(p.leq->k) + " ";
    if (p.geq) lhs += "N_geq=" + std::to_string(p.geq->k);
    if (p.lambda >= 1.0) rhs += "leq>=" + fmt(p.lower_leq) + " ";
    if (p.lambda <= 1.0) rhs += "geq>=" + fmt(p.lower_geq);
    line("partition@" + fmt(p.lambda), lhs, ">=", rhs, p.verdict);
  }
  const auto& one = r.partition_at_one;
  line("partition_at_one",
       one.verdict == Verdict::Skipped
           ? std::string("-")
           : "N_geq=" + std::to_string(one.n_geq) + " N_leq=" + std::to_string(one.n_leq),
       one.is_graph ? "==" : "<=", "chi=" + std::to_string(one.chi), one.verdict);
  line("trace", "sum=" + fmt(r.trace_check.sum_eigenvalues), "==", "n=" + std::to_string(r.trace_check.n),
       r.trace_check.verdict);
  line("witnesses", "alpha alpha_w omega chi chi_v", "", "", r.witnesses.verdict);
  out << (r.all_hold() ? "all applicable checks hold\n" : "SOME CHECKS FAIL\n");
  return out.str();
}

}  // namespace ohg
