#include "cli/report.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include "cli/expectations.hpp"
#include "cli/input.hpp"
#include "homalg/errors.hpp"
#include "homalg/resolution.hpp"
#include "homalg/sphere_models.hpp"

namespace homalg::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string ring_name(Ring r) { return r == Ring::integers ? "Z" : "Q"; }

class Stopwatch {
 public:
  void lap(const std::string& stage) {
    auto now = Clock::now();
    laps_[stage] = std::chrono::duration<double>(now - last_).count();
    last_ = now;
  }
  json laps() const { return laps_; }

 private:
  Clock::time_point last_ = Clock::now();
  json laps_ = json::object();
};

class Report {
 public:
  Report(const std::string& scenario, const Options& opt) : ring_(opt.ring) {
    doc_["scenario"] = scenario;
    doc_["ring"] = ring_name(opt.ring);
    doc_["parameters"] = json::object();
    doc_["stages"] = json::object();
    doc_["tables"] = json::object();
    doc_["checks"] = json::array();
  }

  json& parameters() { return doc_["parameters"]; }
  json& stage(const std::string& name) { return doc_["stages"][name]; }
  Ring ring() const { return ring_; }

  void check(const std::string& name, const json& expected, const json& actual) {
    doc_["checks"].push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}});
  }

  void table(const std::string& name, std::vector<std::string> columns, json rows) {
    doc_["tables"][name] = {{"columns", std::move(columns)}, {"rows", std::move(rows)}};
  }

  json finish(const Options& opt, const Stopwatch& clock) {
    bool ok = true;
    for (const auto& c : doc_["checks"]) ok = ok && c["pass"].get<bool>();
    doc_["verdict"] = ok ? "pass" : "fail";
    if (opt.timing) doc_["timing_seconds"] = clock.laps();
    return std::move(doc_);
  }

 private:
  Ring ring_;
  json doc_;
};

json ranks_object(const DegreeRanks& r) {
  json o = json::object();
  for (const auto& [d, k] : r) o[std::to_string(d)] = k;
  return o;
}

// Ranks of `a` over the degrees of `expected` and of `a` itself.
DegreeRanks algebra_ranks(const DgAlgebra& a, const DegreeRanks& expected) {
  DegreeRanks out;
  for (const auto& [d, k] : expected) out[d] = a.degree_rank(d);
  for (int d : a.degrees()) out[d] = a.degree_rank(d);
  return out;
}

DegreeRanks pad(DegreeRanks r, const DegreeRanks& like) {
  for (const auto& [d, k] : like) r.emplace(d, 0);
  return r;
}

DegreeRanks betti_of(const CohomologyRanks& c, const DegreeRanks& expected) {
  DegreeRanks out;
  for (const auto& [d, k] : expected) out[d] = 0;
  for (const auto& [d, b] : c.betti) out[d] = b;
  return out;
}

json torsion_json(const CohomologyRanks& c) {
  json o = json::object();
  for (const auto& [d, fs] : c.torsion) {
    json arr = json::array();
    for (const auto& f : fs) arr.push_back(f.get_str());
    o[std::to_string(d)] = arr;
  }
  return o;
}

void cohomology_section(Report& rep, const std::string& name, const CohomologyRanks& c, const DegreeRanks& like) {
  json& s = rep.stage(name);
  s["betti"] = ranks_object(betti_of(c, like));
  if (rep.ring() == Ring::integers) s["torsion"] = torsion_json(c);
  json rows = json::array();
  for (const auto& [d, b] : betti_of(c, like)) {
    json row = {d, b};
    if (rep.ring() == Ring::integers) {
      std::string t;
      if (c.torsion.count(d))
        for (const auto& f : c.torsion.at(d)) t += (t.empty() ? "" : ",") + f.get_str();
      row.push_back(t);
    }
    rows.push_back(row);
  }
  std::vector<std::string> cols = {"degree", "betti"};
  if (rep.ring() == Ring::integers) cols.push_back("torsion");
  rep.table(name, cols, rows);
}

void algebra_tables(Report& rep, const std::string& name, const DgAlgebra& a) {
  json ranks = json::array();
  for (int d : a.degrees()) ranks.push_back({d, a.degree_rank(d)});
  rep.table(name + "_ranks", {"degree", "rank"}, ranks);
  json rows = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back({a.degree(i), a.label(i), a.format(a.differential(i))});
  rep.table(name + "_differential", {"degree", "element", "image"}, rows);
}

void resolution_section(Report& rep, const ComplexOfReps& j, const std::vector<ResolutionTarget>& targets,
                        const std::vector<std::string>& target_names) {
  auto viol = validate_resolution(j, targets);
  json rows = json::array();
  for (int d : j.support()) {
    std::string names;
    for (const auto& b : j.blocks(d)) names += (names.empty() ? "" : " + ") + b.name;
    rows.push_back({d, names});
  }
  rep.table("resolution_terms", {"degree", "blocks"}, rows);
  json tgt = json::array();
  for (std::size_t i = 0; i < targets.size(); ++i) tgt.push_back({targets[i].degree, target_names[i]});
  rep.table("resolution_targets", {"degree", "representation"}, tgt);
  json v = json::array();
  for (const auto& x : viol) v.push_back(x.vertex + " degree " + std::to_string(x.degree) + ": " + x.message);
  rep.stage("resolution")["violations"] = v;
  rep.check("resolution is exact at every stalk", 0, viol.size());
}

SparseVec row_vector(const DgAlgebra& a, int degree, const std::vector<std::pair<std::string, int>>& image,
                     bool& known) {
  SparseVec v;
  for (const auto& [label, c] : image) {
    auto i = a.find(label, degree);
    if (!i) {
      known = false;
      continue;
    }
    axpy(v, c, single(*i));
  }
  return v;
}

void differential_checks(Report& rep, const DgAlgebra& a, const std::vector<DifferentialRow>& rows) {
  for (const auto& row : rows) {
    const std::string name = "d(" + row.element + ") in degree " + std::to_string(row.degree);
    bool known = true;
    SparseVec expected = row_vector(a, row.degree + 1, row.image, known);
    std::string want = known ? a.format(expected) : "unknown labels";
    auto i = a.find(row.element, row.degree);
    std::string got = i ? a.format(a.differential(*i)) : "missing element";
    rep.check(name, want, got);
  }
}

json violations_json(const std::vector<std::string>& v) { return v; }

void witness_section(Report& rep, const Witness& w) {
  json& s = rep.stage("witness");
  json reps = json::array();
  const DgAlgebra& h = *w.cohomology.algebra;
  for (std::size_t i = 0; i < h.dim(); ++i)
    reps.push_back({{"class", h.label(i)}, {"degree", h.degree(i)},
                    {"representative", w.cohomology.source->format(w.cohomology.section[i])}});
  s["representatives"] = reps;
  s["violations"] = violations_json(w.violations);
  s["quasi_isomorphism"] = w.quasi_isomorphism;
  json products = json::array();
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (const auto& [j, v] : h.right_products(i)) products.push_back({h.label(i), h.label(j), h.format(v)});
  rep.table("cohomology_products", {"left", "right", "product"}, products);
  rep.check("representatives are closed under multiplication", json::array(), s["violations"]);
  rep.check("witness is a quasi-isomorphism", true, w.quasi_isomorphism);
}

json two_point_parameters(const Options& opt) {
  if (opt.n != 2) throw PreconditionError("this stratification uses the two-point model; --n must be 2");
  return {{"n", 2}};
}

json run_trivial(const Options& opt) {
  Report rep("trivial", opt);
  Stopwatch clock;
  rep.parameters() = two_point_parameters(opt);
  SphereModel m = build_An(2, opt.ring);
  ModelResolution r = resolution_trivial(m);
  resolution_section(rep, r.complex, r.targets, {"C"});
  clock.lap("resolution");
  DgAlgebraPtr e = end_algebra(r);
  rep.stage("end")["violations"] = validate_dg_algebra(*e);
  rep.check("End is a dg algebra", json::array(), rep.stage("end")["violations"]);
  algebra_tables(rep, "end", *e);
  rep.check("End ranks", ranks_object(trivial_end_ranks()), ranks_object(algebra_ranks(*e, trivial_end_ranks())));
  differential_checks(rep, *e, trivial_differential_rows());
  clock.lap("end");
  CohomologyRanks h = cohomology_ranks(e->complex());
  cohomology_section(rep, "cohomology", h, trivial_cohomology());
  rep.check("cohomology ranks", ranks_object(trivial_cohomology()), ranks_object(betti_of(h, trivial_cohomology())));
  if (opt.ring == Ring::integers) rep.check("cohomology is torsion-free", json::object(), torsion_json(h));
  clock.lap("cohomology");
  witness_section(rep, formality_witness_trivial(e));
  clock.lap("witness");
  return rep.finish(opt, clock);
}

json run_one_point(const Options& opt) {
  Report rep("one-point", opt);
  Stopwatch clock;
  rep.parameters() = two_point_parameters(opt);
  SphereModel m = build_An(2, opt.ring);
  ModelResolution r = resolution_one_point(m);
  resolution_section(rep, r.complex, r.targets, {"C", "W1"});
  clock.lap("resolution");
  DgAlgebraPtr e = end_algebra(r);
  rep.stage("end")["violations"] = validate_dg_algebra(*e);
  rep.check("End is a dg algebra", json::array(), rep.stage("end")["violations"]);
  algebra_tables(rep, "end", *e);
  rep.check("End ranks", ranks_object(one_point_end_ranks()), ranks_object(algebra_ranks(*e, one_point_end_ranks())));
  differential_checks(rep, *e, one_point_differential_rows());
  DegreeRanks ker, im;
  for (const auto& [d, k] : one_point_kernel_ranks()) ker[d] = e->degree_rank(d) - rank(e->differential_matrix(d));
  for (const auto& [d, k] : one_point_image_ranks()) im[d] = rank(e->differential_matrix(d));
  rep.check("kernel ranks of d", ranks_object(one_point_kernel_ranks()), ranks_object(ker));
  rep.check("image ranks of d", ranks_object(one_point_image_ranks()), ranks_object(im));
  clock.lap("end");
  CohomologyRanks h = cohomology_ranks(e->complex());
  cohomology_section(rep, "cohomology", h, one_point_cohomology());
  rep.check("cohomology ranks", ranks_object(one_point_cohomology()),
            ranks_object(betti_of(h, one_point_cohomology())));
  if (opt.ring == Ring::integers) rep.check("cohomology is torsion-free", json::object(), torsion_json(h));
  clock.lap("cohomology");
  witness_section(rep, formality_witness_one_point(e));
  clock.lap("witness");
  return rep.finish(opt, clock);
}

json run_n_points(const Options& opt) {
  if (opt.n < 2) throw PreconditionError("the n-point model needs n >= 2");
  const int n = opt.n;
  Report rep("n-points", opt);
  Stopwatch clock;
  rep.parameters() = {{"n", n}};
  SphereModel m = build_An(n, opt.ring);
  ModelResolution r = resolution_n_points(m);
  std::vector<std::string> names = {"C"};
  for (int i = 1; i <= n; ++i) names.push_back("W" + std::to_string(i));
  resolution_section(rep, r.complex, r.targets, names);
  clock.lap("resolution");
  DgAlgebraPtr e = end_algebra(r);
  rep.stage("end")["violations"] = validate_dg_algebra(*e);
  rep.check("End is a dg algebra", json::array(), rep.stage("end")["violations"]);
  algebra_tables(rep, "end", *e);
  rep.check("End ranks", ranks_object(n_point_end_ranks(n)), ranks_object(algebra_ranks(*e, n_point_end_ranks(n))));
  clock.lap("end");
  CohomologyRanks h = cohomology_ranks(e->complex());
  cohomology_section(rep, "cohomology", h, n_point_cohomology(n));
  rep.check("cohomology ranks", ranks_object(n_point_cohomology(n)), ranks_object(betti_of(h, n_point_cohomology(n))));
  if (opt.ring == Ring::integers) rep.check("cohomology is torsion-free", json::object(), torsion_json(h));
  clock.lap("cohomology");

  NPointChain chain = formality_chain_n_points(e, n);
  clock.lap("chain");
  const DgAlgebra& u = *chain.u.algebra;
  algebra_tables(rep, "subalgebra", u);
  rep.check("subalgebra ranks", ranks_object(n_point_subalgebra_ranks(n)),
            ranks_object(pad(algebra_ranks(u, n_point_subalgebra_ranks(n)), n_point_subalgebra_ranks(n))));
  DegreeRanks ideal;
  for (const auto& [d, k] : n_point_ideal_ranks(n)) ideal[d] = chain.ideal.rank(d);
  rep.check("ideal ranks", ranks_object(n_point_ideal_ranks(n)), ranks_object(ideal));
  CohomologyRanks hi = cohomology_ranks(chain.ideal.complex());
  rep.stage("ideal")["generated_by_input"] = chain.ideal.generated_by_input;
  rep.stage("ideal")["cohomology_betti"] = ranks_object(betti_of(hi, {}));
  rep.check("ideal is acyclic", true, hi.acyclic());
  algebra_tables(rep, "quotient", *chain.quotient.algebra);
  algebra_tables(rep, "formal", *chain.cohomology.algebra);

  FormalityReport f = verify_formality_chain(chain.chain);
  clock.lap("verify");
  json arrows = json::array();
  const char* names_of_arrows[] = {"inclusion", "projection", "section"};
  for (std::size_t i = 0; i < f.arrows.size(); ++i) {
    const auto& a = f.arrows[i];
    arrows.push_back({{"map", names_of_arrows[i]},
                      {"direction", a.direction == Direction::forward ? "forward" : "backward"},
                      {"violations", a.violations},
                      {"quasi_isomorphism", a.quasi_isomorphism}});
    rep.check(std::string(names_of_arrows[i]) + " is a quasi-isomorphism of dg algebras", true,
              a.violations.empty() && a.quasi_isomorphism);
  }
  json& s = rep.stage("chain");
  s["arrows"] = arrows;
  s["problems"] = f.problems;
  s["terminal_has_zero_differential"] = f.terminal_has_zero_differential;
  s["identification_multiplicative"] = f.identification_multiplicative;
  rep.check("formality chain verifies", true, f.verdict);
  return rep.finish(opt, clock);
}

json run_de_rham(const Options& opt) {
  if (opt.ring != Ring::rationals) throw PreconditionError("the de Rham model is defined over Q; use --ring Q");
  if (opt.n < 2) throw PreconditionError("the de Rham model needs n >= 2");
  Report rep("de-rham", opt);
  Stopwatch clock;
  rep.parameters() = {{"n", opt.n}};
  DeRhamModel m = de_rham_model(opt.n);
  const DgAlgebra& a = *m.algebra;
  algebra_tables(rep, "algebra", a);
  json basis = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto [r, c] = m.entry.at(a.label(i));
    basis.push_back({a.label(i), a.degree(i), std::to_string(r) + "," + std::to_string(c)});
  }
  rep.table("algebra_basis", {"element", "degree", "entry"}, basis);
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& [j, v] : a.right_products(i)) products.push_back({a.label(i), a.label(j), a.format(v)});
  rep.table("algebra_products", {"left", "right", "product"}, products);
  rep.check("algebra dimension", de_rham_dimension, a.dim());
  rep.stage("algebra")["violations"] = validate_dg_algebra(a);
  rep.check("algebra is a dg algebra", json::array(), rep.stage("algebra")["violations"]);
  bool tau_square = true;
  for (const char* x : {"tau_C", "tau_D"})
    for (const char* y : {"tau_C", "tau_D"})
      tau_square = tau_square && a.product(*a.find(x), *a.find(y)).empty();
  rep.check("tau * tau = 0", true, tau_square);
  clock.lap("algebra");

  const DgAlgebra& h = *m.cohomology.algebra;
  algebra_tables(rep, "cohomology", h);
  std::map<std::string, std::size_t> by_entry;
  for (const auto& [e, k] : de_rham_cohomology_by_entry()) by_entry[std::to_string(e.first) + "," + std::to_string(e.second)] = 0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto it = m.entry.find(h.label(i));
    std::string key = it == m.entry.end() ? "?" : std::to_string(it->second.first) + "," + std::to_string(it->second.second);
    ++by_entry[key];
  }
  json expected = json::object();
  for (const auto& [e, k] : de_rham_cohomology_by_entry()) expected[std::to_string(e.first) + "," + std::to_string(e.second)] = k;
  rep.check("cohomology dimension", de_rham_cohomology_dimension, h.dim());
  rep.check("cohomology dimension by matrix entry", expected, by_entry);
  rep.check("cohomology has zero differential", true, h.has_zero_differential());
  auto pv = validate_dg_morphism(m.cohomology.projection);
  rep.stage("projection")["violations"] = pv;
  bool qi = pv.empty() && is_quasi_iso_dg(m.cohomology.projection);
  rep.stage("projection")["quasi_isomorphism"] = qi;
  rep.check("projection onto cohomology is a quasi-isomorphism of dg algebras", true, qi);
  clock.lap("cohomology");
  return rep.finish(opt, clock);
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex lock;
  std::size_t next = 0;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> g(lock);
          if (next >= count || error) return;
          i = next++;
        }
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> g(lock);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

json ext_row(const std::string& s, const std::string& t, int q, const ExtGroup& g, Ring ring) {
  json row = {s, t, q, g.betti};
  if (ring == Ring::integers) {
    std::string tors;
    for (const auto& f : g.torsion) tors += (tors.empty() ? "" : ",") + f.get_str();
    row.push_back(tors);
  }
  return row;
}

std::vector<std::string> ext_columns(Ring ring) {
  std::vector<std::string> cols = {"source", "target", "q", "betti"};
  if (ring == Ring::integers) cols.push_back("torsion");
  return cols;
}

// ext[s][t] = Ext^0..qmax(reps[s], reps[t])
std::vector<std::vector<std::vector<ExtGroup>>> ext_matrix(const std::vector<RepresentationPtr>& reps, int qmax,
                                                           unsigned threads) {
  std::vector<std::vector<std::vector<ExtGroup>>> out(reps.size());
  parallel_for(reps.size(), threads, [&](std::size_t s) {
    ProjectiveResolution res = projective_resolution(*reps[s]);
    for (const auto& t : reps) out[s].push_back(ext_groups(res, t, qmax));
  });
  return out;
}

}  // namespace

json formality_report(const std::string& scenario, const Options& opt) {
  if (scenario == "trivial") return run_trivial(opt);
  if (scenario == "one-point") return run_one_point(opt);
  if (scenario == "n-points") return run_n_points(opt);
  if (scenario == "de-rham") return run_de_rham(opt);
  throw PreconditionError("unknown scenario '" + scenario + "'");
}

json ext_table_report(const Options& opt) {
  if (opt.n < 2) throw PreconditionError("the n-point model needs n >= 2");
  if (opt.qmax < 0) throw PreconditionError("--qmax must be non-negative");
  Report rep("ext-table", opt);
  Stopwatch clock;
  rep.parameters() = {{"n", opt.n}, {"qmax", opt.qmax}};
  SphereModel m = build_An(opt.n, opt.ring);
  std::vector<std::string> strata = m.strata();
  std::vector<RepresentationPtr> reps;
  for (const auto& s : strata) reps.push_back(m.closure(s));
  auto ext = ext_matrix(reps, opt.qmax, opt.threads);
  clock.lap("ext");

  json rows = json::array();
  json higher = json::array();
  std::set<std::string> hom;
  for (std::size_t s = 0; s < strata.size(); ++s)
    for (std::size_t t = 0; t < strata.size(); ++t)
      for (int q = 0; q <= opt.qmax; ++q) {
        const ExtGroup& g = ext[s][t][static_cast<std::size_t>(q)];
        rows.push_back(ext_row(strata[s], strata[t], q, g, opt.ring));
        if (q > 0 && !g.is_zero()) higher.push_back(ext_row(strata[s], strata[t], q, g, opt.ring));
        if (q == 0 && !g.is_zero())
          hom.insert(strata[s] + ">" + strata[t] + (g.betti == 1 && g.torsion.empty() ? "" : " rank " + std::to_string(g.betti)));
      }
  rep.table("ext", ext_columns(opt.ring), rows);
  rep.stage("ext")["pairs"] = strata.size() * strata.size();
  rep.check("Ext^q vanishes for 0 < q <= qmax", json::array(), higher);
  std::set<std::string> expected;
  for (const auto& [s, t] : n_point_hom_list(opt.n)) expected.insert(s + ">" + t);
  rep.check("Ext^0 equals the list of nonzero Hom spaces", expected, hom);
  return rep.finish(opt, clock);
}

json compute_report(const std::string& poset_path, const std::string& reps_path, const std::string& action,
                    const Options& opt) {
  static const std::set<std::string> actions = {"hom", "ext", "end", "cohomology"};
  if (!actions.count(action)) throw PreconditionError("unknown action '" + action + "'");
  Report rep("compute", opt);
  Stopwatch clock;
  rep.parameters() = {{"action", action}, {"qmax", opt.qmax}};
  auto quiver = std::make_shared<const Quiver>(build_quiver(parse_poset(read_file(poset_path), poset_path)));
  auto reps = parse_representations(read_file(reps_path), quiver, opt.ring, reps_path);
  clock.lap("input");
  json strata = json::array();
  for (std::size_t v = 0; v < quiver->vertex_count(); ++v)
    strata.push_back({quiver->vertex_name(v), quiver->poset().stratum(v).dim});
  rep.table("strata", {"name", "dim"}, strata);
  json covers = json::array();
  for (const auto& a : quiver->arrows()) covers.push_back({quiver->vertex_name(a.source), quiver->vertex_name(a.target)});
  rep.table("covers", {"lower", "upper"}, covers);
  rep.stage("input")["acyclicity_asserted"] = quiver->poset().acyclicity_asserted();
  rep.stage("input")["representations"] = reps.size();

  if (action == "hom") {
    json rows = json::array();
    for (const auto& a : reps)
      for (const auto& b : reps) rows.push_back({a.name, b.name, hom_space(*a.rep, *b.rep).rank()});
    rep.table("hom", {"source", "target", "rank"}, rows);
  } else if (action == "ext") {
    std::vector<RepresentationPtr> ptrs;
    for (const auto& r : reps) ptrs.push_back(r.rep);
    auto ext = ext_matrix(ptrs, opt.qmax, opt.threads);
    json rows = json::array();
    for (std::size_t s = 0; s < reps.size(); ++s)
      for (std::size_t t = 0; t < reps.size(); ++t)
        for (int q = 0; q <= opt.qmax; ++q)
          rows.push_back(ext_row(reps[s].name, reps[t].name, q, ext[s][t][static_cast<std::size_t>(q)], opt.ring));
    rep.table("ext", ext_columns(opt.ring), rows);
  } else if (action == "cohomology") {
    auto c = std::make_shared<const Representation>(constant_representation(quiver, opt.ring));
    ProjectiveResolution res = projective_resolution(*c);
    json rows = json::array();
    for (const auto& r : reps) {
      auto g = ext_groups(res, r.rep, opt.qmax);
      for (int q = 0; q <= opt.qmax; ++q) {
        json row = ext_row("C", r.name, q, g[static_cast<std::size_t>(q)], opt.ring);
        row.erase(row.begin());
        rows.push_back(row);
      }
    }
    std::vector<std::string> cols = ext_columns(opt.ring);
    cols.erase(cols.begin());
    cols[0] = "representation";
    rep.table("cohomology", cols, rows);
  } else {
    for (const auto& r : reps) {
      InjectiveResolution res = injective_resolution(*r.rep);
      auto viol = validate_resolution(res.complex, r.rep, res.coaugmentation, 0);
      rep.check("resolution of " + r.name + " is exact at every stalk", 0, viol.size());
      auto labeler = [](const std::string& s, const std::string& t, std::size_t k, std::size_t rank) {
        auto strip = [](const std::string& b) { return b.substr(2, b.size() - 3); };
        return sphere_block_label(strip(s), strip(t), k, rank);
      };
      DgAlgebraPtr e = end_dg_algebra(res.complex, labeler);
      json terms = json::array();
      for (int d : res.complex.support()) {
        std::string names;
        for (const auto& b : res.complex.blocks(d)) names += (names.empty() ? "" : " + ") + b.name;
        terms.push_back({d, names});
      }
      rep.table(r.name + "_resolution_terms", {"degree", "blocks"}, terms);
      algebra_tables(rep, r.name + "_end", *e);
      rep.stage(r.name + "_end")["violations"] = validate_dg_algebra(*e);
      rep.check("End of the resolution of " + r.name + " is a dg algebra", json::array(),
                rep.stage(r.name + "_end")["violations"]);
      cohomology_section(rep, r.name + "_cohomology", cohomology_ranks(e->complex()), {});
    }
  }
  clock.lap(action);
  return rep.finish(opt, clock);
}

bool passed(const json& report) { return report.value("verdict", "fail") == "pass"; }

std::string to_tsv(const json& report) {
  std::ostringstream out;
  auto cell = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  out << "# report\n";
  out << "scenario\t" << report["scenario"].get<std::string>() << "\n";
  out << "ring\t" << report["ring"].get<std::string>() << "\n";
  out << "verdict\t" << report["verdict"].get<std::string>() << "\n";
  for (const auto& [name, t] : report["tables"].items()) {
    out << "\n# " << name << "\n";
    std::string header;
    for (const auto& c : t["columns"]) header += (header.empty() ? "" : "\t") + c.get<std::string>();
    out << header << "\n";
    for (const auto& row : t["rows"]) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "\t" : "") + cell(row[i]);
      out << line << "\n";
    }
  }
  out << "\n# checks\nname\tpass\texpected\tactual\n";
  for (const auto& c : report["checks"])
    out << c["name"].get<std::string>() << "\t" << (c["pass"].get<bool>() ? "pass" : "fail") << "\t"
        << cell(c["expected"]) << "\t" << cell(c["actual"]) << "\n";
  if (report.contains("timing_seconds")) {
    out << "\n# timing_seconds\nstage\tseconds\n";
    for (const auto& [k, v] : report["timing_seconds"].items()) out << k << "\t" << v.dump() << "\n";
  }
  return out.str();
}

}  // namespace homalg::cli
