#include "smashcoh/cli/run.hpp"

#include <sstream>

#include "json.hpp"

#include "smashcoh/ext/ext_pipeline.hpp"
#include "smashcoh/spectral/checks.hpp"
#include "smashcoh/spectral/spectral_sequence.hpp"

namespace smashcoh {

namespace {

using nlohmann::ordered_json;

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

/// Sparse coordinates as [index, "value"] pairs.
ordered_json sparse_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) a.push_back({i, v[i].to_string()});
  return a;
}

ordered_json products_json(const CohomologyRing& r) {
  ordered_json out = ordered_json::array();
  for (int n1 = 1; n1 <= r.maxdeg; ++n1)
    for (int n2 = 1; n1 + n2 <= r.maxdeg; ++n2)
      for (int i = 0; i < r.dim(n1); ++i)
        for (int j = 0; j < r.dim(n2); ++j) {
          const Vec& p = r.product(n1, i, n2, j);
          bool zero = true;
          for (const auto& x : p) zero = zero && x.is_zero();
          if (!zero) out.push_back({{"left", {n1, i}}, {"right", {n2, j}}, {"value", vec_json(p)}});
        }
  return out;
}

ordered_json ring_json(const HHRing& r) {
  ordered_json j;
  j["dims"] = r.dims();
  j["indecomposables"] = r.indecomposables();
  if (!r.gr_gamma.empty()) j["gr_gamma"] = r.gr_gamma;
  if (!r.gr_a.empty()) j["gr_a"] = r.gr_a;
  ordered_json reps = ordered_json::array();
  for (const auto& h : r.ring.groups) {
    ordered_json deg = ordered_json::array();
    for (const auto& v : h.representatives) deg.push_back(sparse_json(v));
    reps.push_back(deg);
  }
  j["representatives"] = reps;
  j["products"] = products_json(r.ring);
  return j;
}

std::string grading_text(const std::string& label, const std::vector<std::vector<int>>& gr) {
  std::ostringstream os;
  for (std::size_t n = 0; n < gr.size(); ++n) os << label << " H^" << n << ": " << join(gr[n]) << "\n";
  return os.str();
}

std::string ring_text(const HHRing& r) {
  std::ostringstream os;
  os << r.sketch();
  if (!r.gr_gamma.empty()) os << grading_text("gr_gamma", r.gr_gamma);
  if (!r.gr_a.empty()) os << grading_text("gr_a", r.gr_a);
  return os.str();
}

std::string table_text(const std::vector<std::vector<int>>& t) {
  std::ostringstream os;
  for (std::size_t p = 0; p < t.size(); ++p) os << "  p=" << p << ": " << join(t[p]) << "\n";
  return os.str();
}

void list_failures(std::ostringstream& os, ordered_json& j, const std::string& key,
                   const std::vector<std::string>& failures) {
  j[key] = failures;
  for (const auto& f : failures) os << key << ": " << f << "\n";
}

PipelineOptions hh_options(const JobSpec& job, int top) {
  PipelineOptions o;
  o.top = top;
  o.extension = job.extension;
  o.smash_side = false;
  return o;
}

Report task_validate(const JobSpec& job, ordered_json& j) {
  std::ostringstream os;
  if (job.lhs) {
    os << "ok, N of order " << job.lhs->n.order() << ", G of order " << job.lhs->g.order() << "\n";
    j["n_order"] = job.lhs->n.order();
    j["g_order"] = job.lhs->g.order();
  } else {
    int order = antipode_order(job.action->hopf);
    os << "ok, antipode order " << order << "\n";
    j["antipode_order"] = order;
    j["dim_gamma"] = job.action->hopf.dim();
    j["dim_a"] = job.action->algebra.dim();
    if (job.module) j["dim_module"] = job.module->dim;
  }
  j["ok"] = true;
  return {os.str(), "", 0};
}

Report task_hh(const JobSpec& job, ordered_json& j) {
  HHPipeline pl(*job.action, hh_options(job, job.maxdeg + 1));
  HHRing r = hh_ring(pl.double_complex(), job.maxdeg);
  j["ring"] = ring_json(r);
  return {"HH through degree " + std::to_string(job.maxdeg) + "\n" + ring_text(r), "", 0};
}

Report task_ext(const JobSpec& job, ordered_json& j) {
  ExtOptions o;
  o.top = job.maxdeg + 1;
  o.left_side = false;
  ExtPipeline pl(*job.action, *job.module, o);
  HHRing r = pl.ring(job.maxdeg);
  j["ring"] = ring_json(r);
  return {"Ext through degree " + std::to_string(job.maxdeg) + "\n" + ring_text(r), "", 0};
}

Report spectral_report(const JobSpec& job, const GammaHomDoubleComplex& dc, ordered_json& j) {
  std::ostringstream os;
  // enough pages for E_inf in every total degree through maxdeg; only job.pages are printed
  SpectralSequence ss(dc.total(), &dc, job.filtration, std::max(job.pages, job.maxdeg + 2), job.maxdeg);
  j["filtration"] = job.filtration == Filtration::column ? "column" : "row";
  ordered_json pages = ordered_json::array();
  for (int r = 1; r <= job.pages; ++r) {
    os << ss.format(r);
    ordered_json pj;
    pj["r"] = r;
    pj["dims"] = ss.table(r);
    ordered_json diffs = ordered_json::array();
    for (const auto& [st, m] : ss.page(r).d)
      if (int rk = rank(m); rk > 0) {
        auto [p, q] = ss.pq(st.first, st.second);
        ordered_json dj;
        dj["source"] = {p, q};
        dj["rank"] = rk;
        diffs.push_back(dj);
      }
    pj["nonzero_differentials"] = diffs;
    ordered_json prods = ordered_json::array();
    int count = 0;
    const auto& slots = ss.page(r).slots;
    for (const auto& [a, sa] : slots)
      for (const auto& [b, sb] : slots) {
        if (a.first + a.second + b.first + b.second > job.maxdeg || sa.dim() == 0 || sb.dim() == 0) continue;
        for (int i = 0; i < sa.dim(); ++i)
          for (int k = 0; k < sb.dim(); ++k) {
            Vec x = unit_vec(job.field, static_cast<std::size_t>(sa.dim()), static_cast<std::size_t>(i));
            Vec y = unit_vec(job.field, static_cast<std::size_t>(sb.dim()), static_cast<std::size_t>(k));
            Vec z = ss.product(r, a.first, a.second, x, b.first, b.second, y);
            bool zero = true;
            for (const auto& c : z) zero = zero && c.is_zero();
            if (zero) continue;
            auto pa = ss.pq(a.first, a.second), pb = ss.pq(b.first, b.second);
            ordered_json pr;
            pr["left"] = {pa.first, pa.second, i};
            pr["right"] = {pb.first, pb.second, k};
            pr["value"] = vec_json(z);
            prods.push_back(pr);
            ++count;
          }
      }
    pj["products"] = prods;
    os << "  nonzero products of basis classes on E_" << r << ": " << count << "\n";
    pages.push_back(pj);
  }
  j["pages"] = pages;
  int code = 0;
  ordered_json stab = ordered_json::array();
  for (int n = 0; n <= job.maxdeg; ++n)
    for (int s = 0; s <= n; ++s) {
      auto [p, q] = ss.pq(s, n - s);
      stab.push_back({{"p", p}, {"q", q}, {"stable_page", SpectralSequence::stable_page(s, n - s)}});
    }
  j["stabilization"] = stab;
  try {
    auto inf = ss.einfty_table();
    j["einfty"] = inf;
    os << "E_inf\n" << table_text(inf);
    {
      auto e2 = ss.table(2);
      bool collapsed = e2 == inf;
      bool column = true;
      for (std::size_t p = 1; p < e2.size(); ++p)
        for (int d : e2[p]) column = column && d == 0;
      j["e2_is_einfty"] = collapsed;
      j["e2_on_p0"] = column;
      if (collapsed && column)
        os << "E₂ = E_∞, support p=0\n";
      else if (collapsed)
        os << "E₂ = E_∞\n";
      else if (column)
        os << "E₂ support p=0\n";
    }
    HHRing r = hh_ring(dc, job.maxdeg);
    auto bad = einfty_vs_gr(ss, &r.ring);
    list_failures(os, j, "einfty_failures", bad);
    if (!bad.empty()) code = 1;
  } catch (const NotStabilized& e) {
    os << "E_inf not reached: " << e.what() << "\n";
    j["einfty"] = nullptr;
    code = 1;
  }
  auto bad = ss.check_pages();
  list_failures(os, j, "page_failures", bad);
  if (!bad.empty()) code = 1;
  return {os.str(), "", code};
}

Report task_ss(const JobSpec& job, ordered_json& j) {
  if (job.module) {
    ExtOptions o;
    o.top = job.maxdeg + 2;
    o.left_side = false;
    ExtPipeline pl(*job.action, *job.module, o);
    return spectral_report(job, pl.double_complex(), j);
  }
  HHPipeline pl(*job.action, hh_options(job, job.maxdeg + 2));
  return spectral_report(job, pl.double_complex(), j);
}

Report task_oracle(const JobSpec& job, ordered_json& j) {
  std::ostringstream os;
  std::vector<int> ours, theirs;
  std::vector<std::string> bad;
  if (job.module) {
    ExtOptions o;
    o.top = job.maxdeg + 1;
    o.left_side = false;
    ExtPipeline pl(*job.action, *job.module, o);
    ours = pl.ring(job.maxdeg).dims();
    ExtOracle oracle(*job.module, job.maxdeg);
    theirs = oracle.ring().dims();
  } else {
    PipelineOptions po = hh_options(job, job.maxdeg + 1);
    po.smash_side = true;
    HHPipeline pl(*job.action, po);
    ours = hh_ring(pl.double_complex(), job.maxdeg).dims();
    HHOracle oracle(pl.extension(), job.maxdeg);
    theirs = oracle.ring().dims();
    HHRing sm = hh_ring(pl.smash_cochains(), job.maxdeg);
    bad = compare_with_oracle(pl.smash_cochains(), sm, oracle);
  }
  if (ours != theirs) bad.insert(bad.begin(), "dims " + join(ours) + " differ from oracle " + join(theirs));
  os << "double complex: " << join(ours) << "\n" << "oracle:         " << join(theirs) << "\n";
  j["dims"] = ours;
  j["oracle_dims"] = theirs;
  list_failures(os, j, "mismatches", bad);
  os << (bad.empty() ? "agree\n" : "MISMATCH\n");
  j["agree"] = bad.empty();
  return {os.str(), "", bad.empty() ? 0 : 1};
}

Report task_lhs(const JobSpec& job, ordered_json& j) {
  const LHSInput& in = *job.lhs;
  LHSReport r = lhs_specialize(in.n, in.g, in.action, job.field, job.maxdeg);
  std::ostringstream os;
  os << "E2\n" << table_text(r.e2) << "E2 from H(G, H(N))\n" << table_text(r.e2_direct) << "E_inf\n"
     << table_text(r.einfty) << "abutment: " << join(r.abutment.dims()) << "\n"
     << "oracle:   " << join(r.oracle) << "\n";
  j["e2"] = r.e2;
  j["e2_direct"] = r.e2_direct;
  j["einfty"] = r.einfty;
  j["abutment"] = ring_json(r.abutment);
  j["oracle_dims"] = r.oracle;
  list_failures(os, j, "mismatches", r.mismatches);
  return {os.str(), "", r.mismatches.empty() ? 0 : 1};
}

}  // namespace

Report run_job(const JobSpec& job) {
  ordered_json j;
  j["version"] = kVersion;
  j["job"] = job.name;
  j["task"] = job.task;
  j["field"] = job.field.name();
  j["maxdeg"] = job.maxdeg;
  Report r;
  if (job.task == "validate")
    r = task_validate(job, j);
  else if (job.task == "hh")
    r = task_hh(job, j);
  else if (job.task == "ext")
    r = task_ext(job, j);
  else if (job.task == "ss")
    r = task_ss(job, j);
  else if (job.task == "oracle-compare")
    r = task_oracle(job, j);
  else if (job.task == "lhs")
    r = task_lhs(job, j);
  else
    throw std::invalid_argument("unknown task '" + job.task + "'");
  j["exit_code"] = r.exit_code;
  r.text = "job " + job.name + " (" + job.task + ", " + job.field.name() + ")\n" + r.text;
  r.json = j.dump(2) + "\n";
  return r;
}

}  // namespace smashcoh
