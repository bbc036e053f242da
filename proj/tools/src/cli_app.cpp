// Copyright 2026 The lars Authors
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

#include "lars/cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lars/certificate.hpp"
#include "lars/checks.hpp"
#include "lars/gcm.hpp"
#include "lars/grading.hpp"
#include "lars/sampling.hpp"
#include "lars/unitary.hpp"
#include "lars/weyl.hpp"

namespace lars {

namespace {

// A verb splits into validation (may throw UsageError) and the computation it
// returns. Nothing expensive happens before the computation is invoked.
struct Outcome {
  Json body;
  bool ok = true;
};
using Job = std::function<Outcome()>;

RootSystemDesc system_arg(const std::string& s) {
  try {
    return RootSystemDesc::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Json json_arg(const std::string& s) {
  try {
    return parse_json_argument(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << j.dump(2) << '\n';
}

Json roots_json(const std::vector<Weight>& roots) {
  Json a = Json::array();
  for (const auto& r : roots) a.push_back(to_json(r));
  return a;
}

std::vector<Rational> csv_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw UsageError("not a rational: '" + item + "'");
    }
  }
  return out;
}

long window_for(const RootSystemDesc& d, long w) { return d.is_affine() ? w : 0; }

// ---- verbs ---------------------------------------------------------------

struct SystemWindow {
  std::string system;
  long window = 4;
};

void add_system_window(CLI::App* c, SystemWindow& o, long default_window) {
  o.window = default_window;
  c->add_option("--system", o.system, "root system, e.g. BC4:2 or C3:2alt")->required();
  c->add_option("--window", o.window, "delta window |m| <= W")->check(CLI::Range(0L, 64L));
}

Job axioms_job(const SystemWindow& o) {
  const auto desc = system_arg(o.system);
  const long w = window_for(desc, o.window);
  return [desc, w] {
    const auto rep = verify_axioms(desc, desc.J, -w, w);
    const auto cert = axiom_certificate(desc, -w, w, rep);
    return Outcome{cert.to_json(), rep.all_pass()};
  };
}

Job enumerate_job(const SystemWindow& o) {
  const auto desc = system_arg(o.system);
  const long w = window_for(desc, o.window);
  return [desc, w] {
    Json roots = Json::array();
    for (const auto& r : enumerate(desc, desc.J, -w, w))
      roots.push_back({{"root", to_json(r)}, {"sector", to_string(classify(desc, r))}});
    return Outcome{{{"system", desc.name()}, {"window", w}, {"count", roots.size()}, {"roots", roots}}, true};
  };
}

struct GcmOpts {
  std::string roots;
  std::string system = "A1:1";
};

Job gcm_job(const GcmOpts& o) {
  const auto desc = system_arg(o.system);
  const Json j = json_arg(o.roots);
  if (!j.is_array() || j.empty()) throw UsageError("--roots must be a non-empty JSON array of roots");
  std::vector<Weight> roots;
  try {
    for (const auto& r : j) roots.push_back(root_from_json(r));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return [desc, roots] {
    GCMatrix a = cartan_matrix(roots, desc.form);
    const auto rep = classify_type(a);
    Json comps = Json::array();
    for (const auto& c : rep.components) {
      Json w = Json::array();
      for (const auto& x : c.witness) w.push_back(to_json(x));
      comps.push_back({{"indices", c.indices}, {"type", to_string(c.type)}, {"witness", w}});
    }
    Json body{{"matrix", to_json(a.matrix())}, {"type", to_string(rep.type)}, {"components", comps}};
    body["witness"] = rep.components.size() == 1 ? comps[0]["witness"] : Json(nullptr);
    return Outcome{body, true};
  };
}

struct RealizeOpts {
  SystemWindow sw;
  std::string dump;
};

Job realize_job(const RealizeOpts& o) {
  const auto desc = system_arg(o.sw.system);
  if (!desc.is_affine()) throw UsageError("realize needs an affine system (level 1 or 2)");
  const long w = o.sw.window;
  const std::string dump = o.dump;
  return [desc, w, dump] {
    const auto real = Realization::make(desc);
    const auto rs = root_spaces(real, w);
    const bool match = matches_catalog(real, rs);
    std::size_t isotropic = 0, bad_dim = 0;
    for (const auto& [r, b] : rs.spaces) {
      if (r.f.is_zero()) ++isotropic;
      else if (b.size() != 1) ++bad_dim;
    }
    Json body{{"system", desc.name()},
              {"algebra", real.name()},
              {"window", w},
              {"root_count", rs.spaces.size()},
              {"isotropic_roots", isotropic},
              {"cartan_rank", real.cartan_rank()},
              {"trace_scale", to_json(real.trace_scale())},
              {"catalog_match", match},
              {"non_isotropic_multiplicity_one", bad_dim == 0}};
    if (!dump.empty()) {
      Json spaces = Json::array();
      for (const auto& [r, b] : rs.spaces) {
        Json basis = Json::array();
        for (const auto& x : b) basis.push_back(to_json(x));
        spaces.push_back({{"root", to_json(r)}, {"basis", basis}});
      }
      Json cartan = Json::array();
      for (const auto& x : rs.cartan_part) cartan.push_back(to_json(x));
      write_file(dump, {{"system", desc.name()}, {"window", w}, {"cartan", cartan}, {"spaces", spaces}});
      body["dump"] = dump;
    }
    return Outcome{body, match && bad_dim == 0};
  };
}

struct GradingOpts {
  SystemWindow sw;
  std::string weight;
};

Job grading_job(const GradingOpts& o) {
  const auto desc = system_arg(o.sw.system);
  const long w = window_for(desc, o.sw.window);
  Weight lambda;
  try {
    lambda = weight_from_json(json_arg(o.weight));
    require_integral(lambda, desc, w);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return [desc, w, lambda] {
    const auto rep = grading(lambda, desc, w);
    Json grades = Json::array();
    for (const auto& [g, roots] : rep.grades)
      grades.push_back({{"grade", to_json(g)}, {"count", roots.size()}, {"roots", roots_json(roots)}});
    const auto par = parabolic_roots(lambda, desc, w);
    Json body{{"system", desc.name()},
              {"weight", to_json(lambda)},
              {"window", w},
              {"generator", to_json(rep.generator)},
              {"degenerate", rep.degenerate},
              {"window_exact", rep.window_exact},
              {"transversal", is_transversal(lambda)},
              {"grades", grades},
              {"parabolic", {{"zero", par.zero.size()}, {"plus", par.plus.size()}, {"minus", par.minus.size()}}}};
    return Outcome{body, true};
  };
}

struct WeightsOpts {
  std::string system;
  std::string level = "0";
  std::string finite_part;
  long depth = 3;
};

Job weights_job(const WeightsOpts& o) {
  const auto desc = system_arg(o.system);
  const auto eps = csv_rationals(o.finite_part);
  if (eps.size() != desc.J.size())
    throw UsageError("--finite-part needs " + std::to_string(desc.J.size()) + " coordinates");
  Weight lambda{csv_rationals(o.level).at(0), {}, Rational(0)};
  for (std::size_t i = 0; i < eps.size(); ++i) lambda.f.set(desc.J[i], eps[i]);
  if (!desc.is_affine() && !lambda.z.is_zero()) throw UsageError("finite systems have no level");
  const long depth = o.depth;
  return [desc, lambda, depth] {
    const auto simple = standard_simple_system(desc);
    const auto ws = weight_set(lambda, simple, desc.form, depth);
    Json elems = Json::array();
    for (const auto& [w, d] : ws.elements) elems.push_back({{"weight", to_json(w)}, {"depth", d}});
    Json body{{"system", desc.name()},       {"lambda", to_json(lambda)},
              {"dominant", to_json(ws.dominant)}, {"simple_roots", roots_json(simple)},
              {"depth_bound", depth},         {"count", ws.size()},
              {"truncated", ws.truncated},    {"boundary", ws.boundary.size()},
              {"elements", elems}};
    return Outcome{body, true};
  };
}

struct UnitaryOpts {
  SystemWindow sw;
  std::string report;
};

Job unitary_job(const UnitaryOpts& o) {
  const auto desc = system_arg(o.sw.system);
  if (!desc.is_affine()) throw UsageError("unitary needs an affine system");
  const long w = o.sw.window;
  const std::string report = o.report;
  return [desc, w, report] {
    const auto real = Realization::make(desc);
    const auto star = StarInvolution::make(real);
    const auto rs = root_spaces(real, w);
    const auto basis = core_basis(real, rs);
    const auto gram = kappa_sigma_gram(real, basis, star);
    const auto rep = is_psd_hermitian(gram);
    Json factors = Json::array();
    bool positive = true;
    for (const auto& [r, _] : rs.spaces) {
      if (r.f.is_zero()) continue;
      try {
        factors.push_back({{"root", to_json(r)}, {"factor", to_json(check_root_sl2_positivity(real, rs, r, star))}});
      } catch (const UnitaryError& e) {
        positive = false;
        factors.push_back({{"root", to_json(r)}, {"error", e.what()}});
      }
    }
    const auto cert = psd_certificate(gram, rep);
    Json body{{"system", desc.name()},
              {"window", w},
              {"core_dimension", basis.size()},
              {"psd", rep.psd},
              {"kernel_dimension", rep.kernel_dimension},
              {"root_factors", factors},
              {"all_positive", positive}};
    if (!report.empty()) {
      write_file(report, cert.to_json());
      body["report"] = report;
    } else {
      body["certificate"] = cert.to_json();
    }
    return Outcome{body, rep.psd && positive};
  };
}

struct IsoOpts {
  std::string pair;
  std::size_t n = 3;
  long window = 3;
  std::string out;
  std::string replay;
};

Job iso_job(const IsoOpts& o, std::mt19937_64& rng) {
  if (!o.replay.empty()) {
    if (!o.pair.empty()) throw UsageError("--replay excludes --pair");
    Certificate cert;
    try {
      cert = Certificate::from_json(json_arg(o.replay));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed certificate: ") + e.what());
    }
    return [cert] {
      const auto r = replay(cert);
      return Outcome{{{"kind", cert.kind}, {"replay", r.ok}, {"detail", r.detail}}, r.ok};
    };
  }
  if (o.pair.empty()) throw UsageError("iso-cert needs --pair or --replay");
  if (o.n < 2) throw UsageError("--n must be at least 2");
  const bool obstruction = o.pair == "A1-C2";
  IsoPair pair{};
  if (!obstruction) {
    try {
      pair = parse_iso_pair(o.pair);
    } catch (const std::exception& e) {
      throw UsageError(std::string(e.what()) + " or A1-C2");
    }
  }
  const std::size_t n = o.n;
  const long window = o.window;
  const std::string out = o.out;
  return [obstruction, pair, n, window, out, &rng] {
    const auto cert = obstruction ? obstruction_certificate(2 * n, rng) : isomorphism_certificate(pair, n, window);
    const auto r = replay(Certificate::from_json(Json::parse(cert.to_json().dump())));
    Json body{{"kind", cert.kind}, {"replay", r.ok}, {"detail", r.detail}};
    if (!out.empty()) {
      write_file(out, cert.to_json());
      body["out"] = out;
    } else {
      body["certificate"] = cert.to_json();
    }
    return Outcome{body, r.ok};
  };
}

struct P3Opts {
  std::size_t n = 4;
  std::size_t samples = 50;
};

Job p3_job(const P3Opts& o, std::mt19937_64& rng) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  const P3Opts opts = o;
  return [opts, &rng] {
    std::size_t conj_ok = 0, neg_ok = 0;
    Json first_failure = nullptr;
    for (std::size_t k = 0; k < opts.samples; ++k) {
      const auto ev = sample_obstruction(opts.n, rng);
      const bool c = ev.p3_conjugated == ev.p3_x;
      const bool t = ev.p3_neg_transposed == -ev.p3_x;
      conj_ok += c;
      neg_ok += t;
      if ((!c || !t) && first_failure.is_null())
        first_failure = {{"sample", k}, {"x", to_json(ev.x)}, {"conjugator", to_json(ev.conjugator)}};
    }
    const bool ok = conj_ok == opts.samples && neg_ok == opts.samples;
    Json body{{"n", opts.n},
              {"samples", opts.samples},
              {"conjugation_fixes_p3", conj_ok},
              {"neg_transpose_negates_p3", neg_ok},
              {"all_pass", ok}};
    if (!ok) body["failure"] = first_failure;
    return Outcome{body, ok};
  };
}

struct SuiteOpts {
  std::vector<int> only;
  bool timing = false;
};

Job suite_job(const SuiteOpts& o, std::mt19937_64& rng) {
  for (int id : o.only)
    if (id < 1 || id > 11) throw UsageError("--only takes criterion ids 1..11");
  const SuiteOpts opts = o;
  return [opts, &rng] {
    const auto results = run_suite(rng, opts.only);
    Json list = Json::array();
    bool ok = true;
    for (const auto& r : results) {
      Json j = to_json(r);
      if (!opts.timing) j.erase("seconds");
      list.push_back(j);
      ok = ok && r.pass;
    }
    return Outcome{{{"checks", list}, {"all_pass", ok}}, ok};
  };
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally affine root systems: catalog, realizations and certificates", "lars"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = sampling_seed();
  app.add_option("--seed", seed, "seed for sampled checks (default: LARS_SEED or built-in)");
  bool compact = false;
  app.add_flag("--compact", compact, "single-line JSON");

  SystemWindow ax, en;
  auto* c_axioms = app.add_subcommand("axioms", "verify the root system axioms on a delta window");
  add_system_window(c_axioms, ax, 4);
  auto* c_enum = app.add_subcommand("enumerate", "list the roots of a system on a delta window");
  add_system_window(c_enum, en, 2);

  GcmOpts gc;
  auto* c_gcm = app.add_subcommand("gcm", "Cartan matrix and type of a list of roots");
  c_gcm->add_option("--roots", gc.roots, "JSON array of roots, inline or a file path")->required();
  c_gcm->add_option("--system", gc.system, "system whose form is used (default A1:1)");

  RealizeOpts re;
  auto* c_real = app.add_subcommand("realize", "root spaces of the matrix realization");
  add_system_window(c_real, re.sw, 3);
  c_real->add_option("--dump-roots", re.dump, "write root vectors to this JSON file");

  GradingOpts gr;
  auto* c_grad = app.add_subcommand("grading", "grading of the roots by an integral weight");
  add_system_window(c_grad, gr.sw, 4);
  c_grad->add_option("--weight", gr.weight, "weight as JSON {c, eps, d}")->required();

  WeightsOpts we;
  auto* c_w = app.add_subcommand("weights", "saturated weight set of a highest weight");
  c_w->add_option("--system", we.system)->required();
  c_w->add_option("--level", we.level, "value on the central element");
  c_w->add_option("--finite-part", we.finite_part, "comma separated epsilon coordinates")->required();
  c_w->add_option("--depth", we.depth, "depth bound")->check(CLI::Range(0L, 64L));

  UnitaryOpts un;
  auto* c_un = app.add_subcommand("unitary", "hermitian form of the compact star on the core");
  add_system_window(c_un, un.sw, 3);
  c_un->add_option("--report", un.report, "write the PSD certificate to this file");

  IsoOpts iso;
  auto* c_iso = app.add_subcommand("iso-cert", "build or replay an isomorphism or obstruction certificate");
  c_iso->add_option("--pair", iso.pair, "B1-D1, C2-BC2, B1-B2 or A1-C2");
  c_iso->add_option("--n", iso.n, "rank")->check(CLI::Range(1, 12));
  c_iso->add_option("--window", iso.window)->check(CLI::Range(0L, 16L));
  c_iso->add_option("--out", iso.out, "write the certificate here");
  c_iso->add_option("--replay", iso.replay, "certificate file to replay");

  P3Opts p3;
  auto* c_p3 = app.add_subcommand("p3-test", "p3 invariance under the two automorphism types");
  c_p3->add_option("--n", p3.n, "matrix size")->check(CLI::Range(1, 32));
  c_p3->add_option("--samples", p3.samples)->check(CLI::Range(1, 100000));

  SuiteOpts su;
  auto* c_suite = app.add_subcommand("suite", "run the end-to-end checks");
  c_suite->add_option("--only", su.only, "criterion ids")->delimiter(',');
  c_suite->add_flag("--timing", su.timing, "report wall time per check");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->add_flag("--json", "machine output (always on)");

  // The first bare word names the verb; --seed is the only global option
  // taking a value.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--seed") ++i;
    if (a.starts_with("-")) continue;
    if (!app.get_subcommand_no_throw(a)) {
      err << "usage error: unknown verb '" << a << "'\n";
      return kUsage;
    }
    break;
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  std::mt19937_64 rng(seed);
  Job job;
  try {
    if (c_axioms->parsed()) job = axioms_job(ax);
    else if (c_enum->parsed()) job = enumerate_job(en);
    else if (c_gcm->parsed()) job = gcm_job(gc);
    else if (c_real->parsed()) job = realize_job(re);
    else if (c_grad->parsed()) job = grading_job(gr);
    else if (c_w->parsed()) job = weights_job(we);
    else if (c_un->parsed()) job = unitary_job(un);
    else if (c_iso->parsed()) job = iso_job(iso, rng);
    else if (c_p3->parsed()) job = p3_job(p3, rng);
    else job = suite_job(su, rng);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  Outcome result;
  try {
    result = job();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    result = {{{"error", e.what()}}, false};
  }
  result.body["ok"] = result.ok;
  out << (compact ? result.body.dump() : result.body.dump(2)) << '\n';
  return result.ok ? kOk : kVerificationFailed;
}

}  // namespace lars
