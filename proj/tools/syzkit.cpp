// syzkit command-line front end: code construction, Betti strands and
// diagrams, the distinguisher, calibration, bound/complexity estimates, the
// Classic McEliece audit, figure reproduction, and defect statistics.
//
// Exit codes: 0 success, 1 input error, 2 budget refusal.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "syzkit/experiments.hpp"

using json = nlohmann::json;
using namespace syzkit;

namespace {

constexpr const char* kSchemaVersion = "1";

struct GlobalOpts {
  uint64_t seed = 0;
  unsigned threads = 1;
  double mem_cap_gb = 0;  // 0: env or default
  bool as_json = false;
  bool as_csv = false;
  std::string out;
};

size_t resolve_mem_cap(const GlobalOpts& g) {
  if (g.mem_cap_gb > 0)
    return static_cast<size_t>(g.mem_cap_gb * (size_t{1} << 30));
  if (const char* env = std::getenv("SYZKIT_MEM_CAP_GB"))
    return static_cast<size_t>(std::atof(env) * (size_t{1} << 30));
  return size_t{3} << 30;
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (!g.out.empty()) {
    std::ofstream os(g.out);
    if (!os) throw std::invalid_argument("cannot open output file: " + g.out);
    os << text;
  } else {
    std::cout << text;
  }
}

codes::FamilySpec parse_family(const std::string& family, uint32_t q,
                               uint32_t m, uint32_t t, size_t n,
                               const std::string& mode) {
  codes::FamilySpec spec;
  if (family == "alt-dual")
    spec.family = codes::CodeFamily::alt_dual;
  else if (family == "goppa-dual")
    spec.family = codes::CodeFamily::goppa_dual;
  else
    throw std::invalid_argument("unknown family: " + family);
  spec.q = q;
  spec.m = m;
  spec.t = t;
  spec.n = n;
  if (mode == "irr")
    spec.mode = codes::GoppaMode::irr;
  else if (mode == "sqfr")
    spec.mode = codes::GoppaMode::sqfr;
  else if (mode == "any")
    spec.mode = codes::GoppaMode::any;
  else
    throw std::invalid_argument("unknown goppa mode: " + mode);
  spec.validate();
  return spec;
}

codes::LinearCode load_code(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open code file: " + path);
  return codes::read_code_file(is);
}

json strand_payload(const codes::LinearCode& c, const syzygy::BettiStrand& st) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = st.n;
  j["k"] = st.k;
  j["q"] = st.q;
  j["beta_strand"] = st.beta;
  size_t dim_c2 = st.k * (st.k + 1) / 2 - st.beta_at(2);
  bool reg2 = dim_c2 == st.n;
  j["regularity2"] = reg2;
  if (reg2 && st.complete) {
    syzygy::BettiDiagram d = syzygy::betti_diagram_reg2(c, st);
    j["beta_row2"] = d.row2;
    json defects = json::array();
    for (uint32_t r = 2; r <= st.computed_up_to; ++r)
      defects.push_back(syzygy::defect(st, r, st.n, st.k));
    j["defects"] = defects;
  } else {
    j["beta_row2"] = nullptr;
    j["defects"] = json::array();
  }
  auto rm = st.r_max();
  if (rm)
    j["r_max"] = *rm;
  else
    j["r_max"] = nullptr;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"syzygy-based code invariants and the alternant/Goppa distinguisher"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--seed", g.seed, "rng seed");
  app.add_option("--threads", g.threads,
                 "worker threads (results identical for any value)");
  app.add_option("--mem-cap-gb", g.mem_cap_gb,
                 "memory cap in GiB (default: SYZKIT_MEM_CAP_GB or 3)");
  app.add_flag("--json", g.as_json, "emit JSON");
  app.add_flag("--csv", g.as_csv, "emit CSV (tables)");
  app.add_option("--out", g.out, "write output to file");

  // --- construct ---
  auto* c_construct = app.add_subcommand("construct", "sample a family member");
  std::string family = "goppa-dual", mode = "irr";
  uint32_t fq = 2, fm = 1, ft = 1;
  size_t fn = 0;
  c_construct->add_option("--family", family, "alt-dual | goppa-dual")->required();
  c_construct->add_option("--q", fq)->required();
  c_construct->add_option("--m", fm)->required();
  c_construct->add_option("--t", ft)->required();
  c_construct->add_option("--n", fn, "length (default q^m)");
  c_construct->add_option("--mode", mode, "irr | sqfr | any");

  // --- betti ---
  auto* c_betti = app.add_subcommand("betti", "linear strand / Betti diagram");
  std::string in_path, dump_dir, record_path;
  uint32_t max_degree = 0;
  c_betti->add_option("--in", in_path, "code file")->required();
  c_betti->add_option("--max-degree", max_degree, "stop at this degree");
  c_betti->add_option("--dump-bases", dump_dir, "write kernel bases here");
  c_betti->add_option("--record", record_path, "write an experiment record");

  // --- distinguish ---
  auto* c_dist = app.add_subcommand("distinguish", "classify a code");
  std::string d_in, d_family = "goppa-dual", d_mode = "irr";
  std::string rstar_str = "auto", s_str = "auto";
  uint32_t dq = 2, dm = 1, dt = 1, d_r = 0;
  size_t d_beta_star = 0;
  c_dist->add_option("--in", d_in, "code file")->required();
  c_dist->add_option("--family", d_family, "alt-dual | goppa-dual");
  c_dist->add_option("--q", dq);
  c_dist->add_option("--m", dm);
  c_dist->add_option("--t", dt);
  c_dist->add_option("--mode", d_mode);
  c_dist->add_option("--r-star", rstar_str, "auto or integer");
  c_dist->add_option("--s", s_str, "auto or integer (shortened mode)");
  c_dist->add_option("--r", d_r, "degree for the basic test");
  c_dist->add_option("--beta-star", d_beta_star, "reference value");

  // --- calibrate ---
  auto* c_cal = app.add_subcommand("calibrate", "beta* of a family");
  std::string cal_family = "goppa-dual", cal_mode = "irr";
  uint32_t cq = 2, cm = 1, ct = 1, cal_deg = 0;
  size_t cn = 0, cal_samples = 5, cal_s = 0;
  c_cal->add_option("--family", cal_family)->required();
  c_cal->add_option("--q", cq)->required();
  c_cal->add_option("--m", cm)->required();
  c_cal->add_option("--t", ct)->required();
  c_cal->add_option("--n", cn);
  c_cal->add_option("--mode", cal_mode);
  c_cal->add_option("--samples", cal_samples);
  c_cal->add_option("--s", cal_s, "shortening order");
  c_cal->add_option("--max-degree", cal_deg);

  // --- estimate ---
  auto* c_est = app.add_subcommand("estimate", "bounds and complexity");
  uint64_t e_q = 2;
  int64_t e_n = 0, e_k = 0;
  double e_omega = 2.372, e_rate = 0;
  bool e_kappa = false, e_gv = false, e_entropy = false, e_asym = false;
  c_est->add_option("--q", e_q);
  c_est->add_option("--n", e_n);
  c_est->add_option("--k", e_k);
  c_est->add_option("--omega", e_omega);
  c_est->add_option("--rate", e_rate);
  c_est->add_flag("--kappa", e_kappa, "log2 kappa for [n,k]");
  c_est->add_flag("--gv", e_gv, "GV distances for [n,k]");
  c_est->add_flag("--entropy", e_entropy, "threshold rates for q");
  c_est->add_flag("--asymptotic", e_asym, "asymptotic exponent");
  auto* c_est_bounds = c_est->add_subcommand("bounds", "EN parameters and bounds");
  uint64_t bq = 2;
  uint32_t bm = 1, bt = 2, br = 2;
  int64_t bs = 0;
  c_est_bounds->add_option("--q", bq)->required();
  c_est_bounds->add_option("--m", bm);
  c_est_bounds->add_option("--t", bt)->required();
  c_est_bounds->add_option("--s", bs);
  c_est_bounds->add_option("--r", br);

  // --- audit ---
  auto* c_audit = app.add_subcommand("audit", "parameter audits");
  auto* c_audit_mc = c_audit->add_subcommand("mceliece", "Classic McEliece table");

  // --- reproduce ---
  auto* c_rep = app.add_subcommand("reproduce", "recompute a known figure/table");
  std::string figure_id;
  c_rep->add_option("id", figure_id, "figure id")->required();

  // --- defect-stats ---
  auto* c_def = app.add_subcommand("defect-stats", "def(phi_r) statistics");
  size_t s_n = 56, s_k = 16, s_d = 11, s_dd = 3, s_samples = 500;
  uint64_t s_q = 2;
  uint32_t s_rmin = 2, s_rmax = 4;
  c_def->add_option("--n", s_n);
  c_def->add_option("--k", s_k);
  c_def->add_option("--q", s_q);
  c_def->add_option("--d", s_d)->required();
  c_def->add_option("--d-dual", s_dd)->required();
  c_def->add_option("--samples", s_samples);
  c_def->add_option("--r-min", s_rmin);
  c_def->add_option("--r-max", s_rmax);

  CLI11_PARSE(app, argc, argv);

  syzygy::StrandOptions strand_opt;
  strand_opt.mem_cap_bytes = resolve_mem_cap(g);

  if (*c_construct) {
    codes::FamilySpec spec = parse_family(family, fq, fm, ft, fn, mode);
    Rng rng(g.seed);
    codes::FamilySample fs = codes::sample_family(spec, rng);
    std::ostringstream os;
    codes::write_code_file(os, fs.code);
    emit(g, os.str());
    if (g.out.empty()) return 0;
    std::cerr << "wrote [" << fs.code.length() << ',' << fs.code.dim()
              << "] code (" << fs.retries << " improper draws)\n";
    return 0;
  }

  if (*c_betti) {
    auto t0 = std::chrono::steady_clock::now();
    codes::LinearCode c = load_code(in_path);
    strand_opt.max_degree = max_degree;
    strand_opt.keep_bases = !dump_dir.empty();
    syzygy::StrandResult res = syzygy::linear_strand(c, strand_opt);
    if (res.strand.refusal) {
      json err;
      err["error"] = "budget";
      err["detail"] = *res.strand.refusal;
      err["computed_up_to"] = res.strand.computed_up_to;
      err["beta_partial"] = res.strand.beta;
      std::cerr << err.dump() << '\n';
      return 2;
    }
    if (!dump_dir.empty()) {
      for (const auto& b : res.bases) {
        std::string base = dump_dir + "/B" + std::to_string(b.degree);
        std::ofstream ms(base + ".txt");
        linalg::write_matrix_text(ms, b.basis);
        std::ofstream ls(base + ".labels.txt");
        if (b.degree == 2) {
          size_t k = c.dim();
          for (size_t p = 0; p < k * (k + 1) / 2; ++p) {
            auto [a, bb] = syzygy::unrank2(k, p);
            ls << p << " pair " << a << ' ' << bb << '\n';
          }
        } else {
          size_t beta_prev = b.basis.cols() / c.dim();
          for (size_t col = 0; col < b.basis.cols(); ++col)
            ls << col << " var " << col / beta_prev << " prev "
               << col % beta_prev << '\n';
        }
      }
    }
    json j = strand_payload(c, res.strand);
    emit(g, j.dump(2) + "\n");
    if (!record_path.empty()) {
      experiments::ExperimentRecord rec;
      rec.command = "betti --in " + in_path +
                    (max_degree ? " --max-degree " + std::to_string(max_degree)
                                : "");
      rec.seed = g.seed;
      rec.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      for (const auto& [r, cc] : res.shapes) {
        if (r * cc > rec.peak_rows * rec.peak_cols) {
          rec.peak_rows = r;
          rec.peak_cols = cc;
        }
      }
      rec.payload = j.dump();
      std::ofstream os(record_path);
      os << experiments::record_to_json(rec) << '\n';
    }
    return 0;
  }

  if (*c_dist) {
    codes::LinearCode c = load_code(d_in);
    dist::DistinguisherConfig cfg;
    cfg.seed = g.seed;
    cfg.strand = strand_opt;
    if (d_r > 0) {
      cfg.shortened = false;
      cfg.r = d_r;
      if (d_beta_star) cfg.beta_star = d_beta_star;
    } else {
      cfg.shortened = true;
      if (rstar_str == "auto") {
        if (d_family == "goppa-dual" && dq == 2)
          cfg.r_star = static_cast<uint32_t>(
              bounds::goppa_en_params(dt).f_hat);
        else
          cfg.r_star =
              static_cast<uint32_t>(bounds::alternant_en_params(dq, dt).f);
      } else {
        cfg.r_star = static_cast<uint32_t>(std::stoul(rstar_str));
      }
      if (s_str == "auto") {
        auto s = dist::max_admissible_shortening(
            static_cast<int64_t>(c.length()), static_cast<int64_t>(c.dim()),
            cfg.r_star);
        if (!s) {
          json err;
          err["error"] = "not distinguishable via shortening";
          std::cerr << err.dump() << '\n';
          return 1;
        }
        cfg.s = static_cast<size_t>(*s);
      } else {
        cfg.s = std::stoul(s_str);
      }
      if (d_beta_star) cfg.beta_star = d_beta_star;
    }
    dist::Verdict v;
    try {
      v = dist::classify(c, cfg);
    } catch (const std::runtime_error& e) {
      json err;
      err["error"] = "budget";
      err["detail"] = e.what();
      std::cerr << err.dump() << '\n';
      return 2;
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["decision"] = v.decision == dist::Decision::special ? "special"
                    : v.decision == dist::Decision::random
                        ? "random"
                        : "indistinguishable";
    j["beta"] = v.beta;
    j["degree"] = v.degree;
    j["threshold"] = v.threshold;
    j["cond1"] = v.conditions.cond1;
    j["cond2"] = v.conditions.cond2;
    j["warnings"] = v.warnings;
    emit(g, j.dump(2) + "\n");
    return 0;
  }

  if (*c_cal) {
    codes::FamilySpec spec = parse_family(cal_family, cq, cm, ct, cn, cal_mode);
    Rng rng(g.seed);
    dist::Calibration cal;
    try {
      cal = dist::calibrate(spec, cal_samples, cal_deg, cal_s, rng, strand_opt);
    } catch (const std::runtime_error& e) {
      json err;
      err["error"] = "budget";
      err["detail"] = e.what();
      std::cerr << err.dump() << '\n';
      return 2;
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["beta_star"] = cal.beta_star;
    j["consensus"] = cal.consensus;
    j["beta_min"] = cal.beta_min;
    j["beta_max"] = cal.beta_max;
    if (cal.r_max)
      j["r_max"] = *cal.r_max;
    else
      j["r_max"] = nullptr;
    j["samples"] = cal.samples;
    emit(g, j.dump(2) + "\n");
    return 0;
  }

  if (*c_est) {
    json j;
    j["schema_version"] = kSchemaVersion;
    if (*c_est_bounds) {
      j["q"] = bq;
      j["t"] = bt;
      j["s"] = bs;
      j["r"] = br;
      bounds::ENParams ep = bounds::alternant_en_params(bq, bt);
      j["e"] = ep.e;
      j["f"] = ep.f;
      j["en_bound"] =
          json::parse(mpz_to_json(bounds::en_strand_bound(ep.f, bs, br)));
      j["en_bound_mfold"] = json::parse(
          mpz_to_json(bounds::en_strand_bound(ep.f, bs, br, bm)));
      if (bq == 2) {
        bounds::GoppaENParams gp = bounds::goppa_en_params(bt);
        j["e_hat"] = gp.e_hat;
        j["f_hat"] = gp.f_hat;
        j["goppa_bound"] =
            json::parse(mpz_to_json(bounds::en_strand_bound(gp.f_hat, bs, br)));
      }
      if (bs == 0 && bm >= 1)
        j["improved_bound"] = json::parse(
            mpz_to_json(bounds::improved_alternant_bound(bm, bq, bt, br)));
      emit(g, j.dump(2) + "\n");
      return 0;
    }
    bool any = false;
    if (e_kappa) {
      if (e_n <= 0 || e_k <= 0)
        throw std::invalid_argument("--kappa needs --n and --k");
      dist::ComplexityEstimate est = dist::kappa_estimate(e_n, e_k, e_omega);
      j["log2_kappa"] = est.log2_kappa;
      j["dominating_index"] = est.dominating_index;
      j["omega"] = est.omega;
      j["heuristic_unsupported"] = est.heuristic_unsupported;
      json terms = json::array();
      for (auto& [i, t] : est.term_log2) terms.push_back({{"i", i}, {"log2", t}});
      j["terms"] = terms;
      any = true;
    }
    if (e_gv) {
      if (e_n <= 0 || e_k <= 0)
        throw std::invalid_argument("--gv needs --n and --k");
      j["d_gv"] = bounds::gv_distance(e_q, e_n, e_k);
      j["d_gv_dual"] = bounds::dual_gv_distance(e_q, e_n, e_k);
      j["gv_convention"] = bounds::kGvConvention;
      any = true;
    }
    if (e_entropy) {
      bounds::ThresholdRates tr = bounds::entropy_threshold_rates(e_q);
      j["R1"] = tr.r1;
      j["R2"] = tr.r2;
      any = true;
    }
    if (e_asym) {
      if (e_rate <= 0 || e_n <= 0)
        throw std::invalid_argument("--asymptotic needs --rate and --n");
      j["asymptotic_exponent"] = dist::asymptotic_exponent(
          e_q, e_rate, static_cast<double>(e_n), e_omega);
      any = true;
    }
    if (!any)
      throw std::invalid_argument(
          "estimate: pick one of --kappa --gv --entropy --asymptotic or "
          "'bounds'");
    emit(g, j.dump(2) + "\n");
    return 0;
  }

  if (*c_audit) {
    if (!*c_audit_mc) throw std::invalid_argument("audit: unknown target");
    experiments::FigureResult fig = experiments::reproduce("tab-mceliece", 0);
    if (g.as_csv) {
      std::ostringstream os;
      os << "n,m,t,r_star,s,n_s,k_s,ratio,d_gv,d_gv_dual,cond1,cond2,"
            "log2_kappa,parenthesized\n";
      for (const auto& p : dist::mceliece_audit()) {
        os << p.n << ',' << p.m << ',' << p.t << ',' << p.r_star << ',' << p.s
           << ',' << p.n_s << ',' << p.k_s << ',' << std::fixed
           << std::setprecision(2) << p.ratio << ',' << p.d_gv << ','
           << p.d_gv_dual << ',' << p.cond1 << ',' << p.cond2 << ','
           << std::setprecision(1) << p.log2_kappa << ',' << p.parenthesized
           << '\n';
      }
      emit(g, os.str());
    } else if (g.as_json) {
      emit(g, fig.json + "\n");
    } else {
      emit(g, fig.text);
    }
    return 0;
  }

  if (*c_rep) {
    experiments::FigureResult fig;
    try {
      fig = experiments::reproduce(figure_id, g.seed, strand_opt);
    } catch (const std::runtime_error& e) {
      json err;
      err["error"] = "budget";
      err["detail"] = e.what();
      std::cerr << err.dump() << '\n';
      return 2;
    }
    emit(g, g.as_json ? fig.json + "\n" : fig.text);
    return 0;
  }

  if (*c_def) {
    Rng rng(g.seed);
    experiments::DefectStatsTable tab;
    try {
      tab = experiments::defect_stats(s_n, s_k, s_q, s_d, s_dd, s_samples,
                                      s_rmin, s_rmax, rng, strand_opt);
    } catch (const std::runtime_error& e) {
      json err;
      err["error"] = "budget";
      err["detail"] = e.what();
      std::cerr << err.dump() << '\n';
      return 2;
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = tab.n;
    j["k"] = tab.k;
    j["q"] = tab.q;
    j["d"] = tab.d;
    j["d_dual"] = tab.d_dual;
    j["samples"] = tab.samples;
    json rows = json::array();
    for (const auto& r : tab.rows)
      rows.push_back({{"r", r.r}, {"mean", r.mean}, {"lo", r.lo}, {"hi", r.hi}});
    j["rows"] = rows;
    emit(g, j.dump(2) + "\n");
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
